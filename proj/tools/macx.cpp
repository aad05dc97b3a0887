// macx: command-line front end.
//
// Exit status: 0 success, 1 usage or parse error, 2 counterexample found.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "macx/macx.hpp"

using namespace macx;

namespace {

std::string braces(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + "}";
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

void print_star(const StarClassification& s) {
    if (s.matches) {
        std::cout << "star condition: matches, p=" << s.p << ", cone " << braces(s.cone_vertices)
                  << " (q=" << s.q() << "), cycle " << braces(s.cycle) << "\n";
    } else {
        std::cout << "star condition: does not match (" << (s.reason ? to_string(*s.reason) : "?") << ")\n";
    }
}

void print_mcgavran(int p, const SphereProductSum& m) {
    std::cout << "McGavran decomposition of Z_{C_" << p << "}: " << m.summands() << " summands in dimension "
              << m.dimension() << "\n";
    for (auto [di, copies] : m.table())
        std::cout << "  " << std::setw(4) << copies << " x S^" << di << " x S^" << (m.dimension() - di) << "\n";
}

int cmd_analyze(const std::string& path, bool as_json) {
    const SimplicialComplex k = load_complex(path);
    const HochsterData h(k);
    const ClassificationReport rep = classify(k, h);
    const std::size_t gens = generator_count(k);
    const std::string name = std::filesystem::path(path).filename().string();

    if (as_json) {
        json out = homology_report(name, h.h_r, h.h_z);
        out["classification"] = classification_to_json(rep);
        out["generator_count"] = gens;
        if (!rep.flag) out["warning"] = "complex is not flag; missing face " + braces(rep.flag_witness);
        if (rep.star_condition.matches) {
            const int p = rep.star_condition.p;
            const auto m = mcgavran(p);
            out["mcgavran"] = mcgavran_to_json(p, m);
            out["poincare_prefix"] = series_to_json(poincare_series_closed(m, 12));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "complex: " << name << " (" << k.num_vertices() << " vertices, dim " << k.dimension() << ")\n";
    if (!rep.flag)
        std::cerr << "warning: complex is not flag; missing face " << braces(rep.flag_witness)
                  << " (group/algebra criteria skipped)\n";
    std::cout << "flag: " << (rep.flag ? "yes" : "no") << "\n";
    std::cout << "chordal 1-skeleton: " << (rep.chordal ? "yes" : "no");
    if (!rep.chordal) std::cout << ", induced cycle " << braces(rep.chordal_witness);
    std::cout << "\n";
    print_star(rep.star_condition);
    std::cout << "free commutator subgroup: " << yes_no(rep.free_group) << "\n";
    std::cout << "one-relator group: " << yes_no(rep.one_relator_group) << "\n";
    std::cout << "one-relator algebra: " << yes_no(rep.one_relator_algebra) << "\n";
    std::cout << "Golod: " << yes_no(rep.golod_flag) << "\n";
    std::cout << "minimally non-Golod: " << yes_no(rep.minimally_non_golod_flag) << "\n";
    std::cout << "generator count: " << gens << "\n";

    std::cout << "H_*(R_K):\n";
    for (std::size_t n = 0; n < h.h_r.size(); ++n) std::cout << "  H_" << n << " = " << h.h_r[n].to_string() << "\n";
    std::cout << "H_{-i,2j}(Z_K), nonzero entries:\n";
    for (const auto& [key, g] : h.h_z.entries())
        std::cout << "  H_{" << -key.first << "," << key.second << "} = " << g.to_string() << "\n";
    std::cout << "Betti numbers of Z_K:";
    for (auto b : betti_Z(h.h_z)) std::cout << " " << b;
    std::cout << "\n";

    if (rep.star_condition.matches) {
        const int p = rep.star_condition.p;
        std::cout << "genus of R_{C_" << p << "}: " << *rep.genus << "\n";
        const auto m = mcgavran(p);
        print_mcgavran(p, m);
        std::cout << "Poincare series prefix: " << poincare_series_closed(m, 12).to_string() << "\n";
    }
    return 0;
}

int cmd_generators(const std::string& path, const std::string& kind_name, bool as_json) {
    const SimplicialComplex k = load_complex(path);
    const auto kind = kind_name == "algebra" ? CommutatorKind::Algebra : CommutatorKind::Group;
    const GeneratorSet set = enumerate_generators(k, kind);
    if (as_json) {
        std::cout << generators_to_json(set).dump(2) << "\n";
        return 0;
    }
    for (const auto& w : set.words) std::cout << render_word(w) << "\n";
    std::cout << "count: " << set.count() << "\n";
    return 0;
}

// "6:3" or "7:3,3,3,4,4"
SphereProductSum parse_pairs(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--pairs", "expected d:d1,d2,...");
    const int d = std::stoi(spec.substr(0, colon));
    std::vector<int> pairs;
    std::stringstream rest(spec.substr(colon + 1));
    for (std::string item; std::getline(rest, item, ',');) pairs.push_back(std::stoi(item));
    return SphereProductSum(d, pairs);
}

int cmd_poincare(int cycle, const std::string& pairs, int n, bool oracle, bool dga, bool half_smash, bool as_json) {
    const SphereProductSum m = cycle > 0 ? mcgavran(cycle) : parse_pairs(pairs);
    const GradedSeries closed = poincare_series_closed(m, n);
    std::optional<GradedSeries> orc, hom;
    if (oracle) orc = rank_oracle_monomials(m, n);
    if (dga) hom = dga_homology_ranks(adams_hilton_model(m), n).ranks;
    bool agree = (!orc || *orc == closed) && (!hom || *hom == closed);
    std::optional<HalfSmashDeviation> dev;
    if (half_smash) dev = half_smash_deviation(m, n);

    if (as_json) {
        json out;
        out["dimension"] = m.dimension();
        out["pairs"] = m.pairs();
        out["truncation"] = n;
        out["closed"] = series_to_json(closed);
        if (orc) out["oracle"] = series_to_json(*orc);
        if (hom) out["dga"] = series_to_json(*hom);
        out["match"] = agree;
        if (dev) {
            json d;
            d["homology"] = series_to_json(dev->homology);
            d["closed_generator_degrees"] = dev->closed_generator_degrees;
            json fd = json::object();
            for (const auto& [r, diff] : dev->first_difference)
                fd[std::to_string(r)] = diff ? json(*diff) : json(nullptr);
            d["first_difference"] = fd;
            d["deviates_from_every_candidate"] = dev->deviates_from_every_candidate();
            out["half_smash"] = d;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "degree  closed";
    if (orc) std::cout << "  oracle";
    if (hom) std::cout << "     dga";
    std::cout << "\n";
    for (int t = 0; t <= n; ++t) {
        std::cout << std::setw(6) << t << "  " << std::setw(6) << closed[t];
        if (orc) std::cout << "  " << std::setw(6) << (*orc)[t];
        if (hom) std::cout << "  " << std::setw(6) << (*hom)[t];
        std::cout << "\n";
    }
    if (orc || hom) std::cout << (agree ? "match" : "MISMATCH") << "\n";
    if (dev) {
        std::cout << "half-smash homology: " << dev->homology.to_string() << "\n";
        for (const auto& [r, diff] : dev->first_difference) {
            std::cout << "  relation in degree " << r << ": ";
            if (diff) std::cout << "differs at degree " << *diff << "\n";
            else std::cout << "no difference\n";
        }
        std::cout << (dev->deviates_from_every_candidate() ? "deviates from every single-relation series"
                                                           : "matches some single-relation series")
                  << "\n";
    }
    return agree ? 0 : 2;
}

int cmd_mcgavran(int p, bool as_json) {
    const auto m = mcgavran(p);
    if (as_json) {
        std::cout << mcgavran_to_json(p, m).dump(2) << "\n";
        return 0;
    }
    print_mcgavran(p, m);
    return 0;
}

int cmd_verify(int max_vertices, bool iso, const std::vector<std::string>& check_names, unsigned threads,
               bool as_json) {
    SweepConfig cfg;
    cfg.max_vertices = max_vertices;
    cfg.dedup_isomorphism = iso;
    cfg.threads = threads;
    if (!check_names.empty()) {
        cfg.checks.clear();
        for (const auto& c : check_names) cfg.checks.insert(parse_sweep_check(c));
    } else if (max_vertices >= 7) {
        cfg.checks = {SweepCheck::ChordalFree, SweepCheck::Thm3};
    }
    const SweepReport rep = run_sweep(cfg);
    if (as_json) {
        std::cout << sweep_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "checks:";
        for (auto c : rep.checks) std::cout << " " << to_string(c);
        std::cout << "\n" << (iso ? "isomorphism classes" : "labelled graphs") << "\n";
        std::cout << " n  complexes  chordal  star  one-rel-group  one-rel-algebra  mnG\n";
        for (const auto& [n, t] : rep.per_vertex_count)
            std::cout << std::setw(2) << n << std::setw(11) << t.complexes << std::setw(9) << t.chordal << std::setw(6)
                      << t.star_matches << std::setw(15) << t.one_relator_group << std::setw(17)
                      << t.one_relator_algebra << std::setw(5) << t.minimally_non_golod << "\n";
        std::cout << "complexes checked: " << rep.complexes_checked << "\n";
        std::cout << "counterexamples: " << rep.counterexamples.size() << "\n";
        for (const auto& c : rep.counterexamples)
            std::cout << "  [" << c.check << "] n=" << c.n << " graph " << c.graph_code << ": " << c.detail << "\n";
    }
    return rep.ok() ? 0 : 2;
}

int cmd_yspace(int l, const std::string& word, bool as_json) {
    const auto r = RelatorWord::parse(word);
    const auto h = y_space_homology(l, r);
    if (as_json) {
        json groups = json::array();
        for (std::size_t k = 0; k < h.size(); ++k)
            groups.push_back({{"k", k}, {"rank", h[k].free_rank}, {"torsion", torsion_to_json(h[k].torsion)}});
        std::cout << json{{"generators", l}, {"word", word}, {"homology", groups}}.dump(2) << "\n";
        return 0;
    }
    for (std::size_t k = 0; k < h.size(); ++k) std::cout << "H_" << k << "(Y) = " << h[k].to_string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology of moment-angle complexes and one-relator criteria"};
    app.require_subcommand(1, 1);
    bool as_json = false;

    auto* analyze = app.add_subcommand("analyze", "classify a complex and print its homology");
    std::string file;
    analyze->add_option("file", file, "complex file")->required();
    analyze->add_flag("--json", as_json);

    auto* gens = app.add_subcommand("generators", "list the commutator generators");
    std::string kind = "group";
    gens->add_option("file", file, "complex file")->required();
    gens->add_option("--kind", kind)->check(CLI::IsMember({"group", "algebra"}));
    gens->add_flag("--json", as_json);

    auto* poincare = app.add_subcommand("poincare", "Poincare series of a connected sum of sphere products");
    int cycle = 0, truncate = 12;
    std::string pairs;
    bool oracle = false, dga = false, half_smash = false;
    auto* cyc_opt = poincare->add_option("--cycle", cycle, "use the McGavran decomposition of Z_{C_p}")
                        ->check(CLI::Range(4, 16));
    auto* pairs_opt = poincare->add_option("--pairs", pairs, "d:d1,d2,... for #(S^{d_i} x S^{d-d_i})");
    cyc_opt->excludes(pairs_opt);
    poincare->add_option("--truncate", truncate)->check(CLI::Range(0, 4096));
    poincare->add_flag("--oracle", oracle, "also count words avoiding a_1 b_1");
    poincare->add_flag("--dga", dga, "also compute Adams-Hilton model homology");
    poincare->add_flag("--half-smash", half_smash, "compare the half-smash model with one-relator series");
    poincare->add_flag("--json", as_json);

    auto* mcg = app.add_subcommand("mcgavran", "summand table for Z_{C_p}");
    int p = 0;
    mcg->add_option("--cycle", p)->required()->check(CLI::Range(4, 16));
    mcg->add_flag("--json", as_json);

    auto* verify = app.add_subcommand("verify-theorems", "exhaustive check over flag complexes");
    int max_vertices = 5;
    bool iso = false;
    unsigned threads = 0;
    std::vector<std::string> checks;
    verify->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, kMaxSweepVertices));
    verify->add_flag("--iso-dedup", iso);
    verify->add_option("--checks", checks)
        ->delimiter(',')
        ->check(CLI::IsMember({"thm3", "thm5", "flagmng", "vanishing", "chordal_free"}));
    verify->add_option("--threads", threads, "worker count (default: MACX_THREADS or hardware)");
    verify->add_flag("--json", as_json);

    auto* yspace = app.add_subcommand("yspace", "homology of the presentation complex of <x_1..x_l | r>");
    int l = 0;
    std::string word;
    yspace->add_option("--generators", l)->required()->check(CLI::PositiveNumber);
    yspace->add_option("--word", word, "e.g. \"x1 x2 x1^-1 x2^-1\"")->required();
    yspace->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*analyze) return cmd_analyze(file, as_json);
        if (*gens) return cmd_generators(file, kind, as_json);
        if (*poincare) {
            if (cycle == 0 && pairs.empty()) {
                std::cerr << "poincare: one of --cycle or --pairs is required\n";
                return 1;
            }
            return cmd_poincare(cycle, pairs, truncate, oracle, dga, half_smash, as_json);
        }
        if (*mcg) return cmd_mcgavran(p, as_json);
        if (*verify) return cmd_verify(max_vertices, iso, checks, threads, as_json);
        if (*yspace) return cmd_yspace(l, word, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
