#pragma once

// Exhaustive sweep over flag complexes on few vertices.
//
// Flag complexes on n vertices are the clique complexes of the 2^{n(n-1)/2}
// labelled graphs. For each one the sweep evaluates the configured
// biconditionals between combinatorial and homological classifiers and keeps
// every disagreement as a counterexample record.

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <tuple>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "macx/classifier.hpp"

namespace macx {

inline constexpr int kMaxSweepVertices = 7;

/// Bit index of the edge {a, b}, a < b, in a graph code: b(b-1)/2 + a.
inline constexpr int edge_index(int a, int b) { return b * (b - 1) / 2 + a; }

inline constexpr int edge_count(int n) { return n * (n - 1) / 2; }

inline Graph graph_from_code(int n, std::uint32_t code) {
    Graph g(VertexSet::range(n));
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a)
            if (code & (std::uint32_t{1} << edge_index(a, b))) g.add_edge(a, b);
    return g;
}

inline std::uint32_t code_of(const Graph& g) {
    std::uint32_t code = 0;
    for (auto [a, b] : g.edges()) code |= std::uint32_t{1} << edge_index(a, b);
    return code;
}

/// Relabelling tables: for each permutation of 0..n-1, where each edge index is sent.
class PermutationTable {
public:
    explicit PermutationTable(int n) : n_(n) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<std::uint8_t> map(static_cast<std::size_t>(edge_count(n)));
            for (int b = 1; b < n; ++b)
                for (int a = 0; a < b; ++a) {
                    int pa = perm[static_cast<std::size_t>(a)], pb = perm[static_cast<std::size_t>(b)];
                    if (pa > pb) std::swap(pa, pb);
                    map[static_cast<std::size_t>(edge_index(a, b))] = static_cast<std::uint8_t>(edge_index(pa, pb));
                }
            maps_.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    std::uint32_t apply(std::size_t perm, std::uint32_t code) const {
        std::uint32_t out = 0;
        const auto& map = maps_[perm];
        for (; code != 0; code &= code - 1) out |= std::uint32_t{1} << map[static_cast<std::size_t>(std::countr_zero(code))];
        return out;
    }

    /// Minimum code over all relabellings.
    std::uint32_t canonical(std::uint32_t code) const {
        std::uint32_t best = code;
        for (std::size_t p = 0; p < maps_.size(); ++p) best = std::min(best, apply(p, code));
        return best;
    }

    /// True iff no relabelling gives a smaller code (stops at the first smaller one).
    bool is_canonical(std::uint32_t code) const {
        for (std::size_t p = 0; p < maps_.size(); ++p)
            if (apply(p, code) < code) return false;
        return true;
    }

    int vertices() const { return n_; }
    std::size_t size() const { return maps_.size(); }

private:
    int n_;
    std::vector<std::vector<std::uint8_t>> maps_;
};

/// Calls fn(code, K) for the clique complex of every labelled graph on n vertices
/// (or of one minimal-code representative per isomorphism class).
template <class Fn>
void for_each_flag_complex(int n, bool dedup_isomorphism, Fn&& fn, unsigned worker = 0, unsigned workers = 1) {
    if (n < 1 || n > kMaxSweepVertices) throw std::invalid_argument("vertex count must be in 1..7");
    std::optional<PermutationTable> perms;
    if (dedup_isomorphism) perms.emplace(n);
    const std::uint32_t total = std::uint32_t{1} << edge_count(n);
    for (std::uint32_t code = worker; code < total; code += workers) {
        if (perms && !perms->is_canonical(code)) continue;
        fn(code, clique_complex(graph_from_code(n, code)));
    }
}

inline std::vector<SimplicialComplex> enumerate_flag_complexes(int n, bool dedup_isomorphism = false) {
    std::vector<SimplicialComplex> out;
    for_each_flag_complex(n, dedup_isomorphism, [&](std::uint32_t, SimplicialComplex k) { out.push_back(std::move(k)); });
    return out;
}

enum class SweepCheck { Thm3, Thm5, FlagMng, Vanishing, ChordalFree };

inline std::string to_string(SweepCheck c) {
    switch (c) {
    case SweepCheck::Thm3: return "thm3";
    case SweepCheck::Thm5: return "thm5";
    case SweepCheck::FlagMng: return "flagmng";
    case SweepCheck::Vanishing: return "vanishing";
    case SweepCheck::ChordalFree: return "chordal_free";
    }
    return "unknown";
}

inline SweepCheck parse_sweep_check(const std::string& s) {
    for (auto c : {SweepCheck::Thm3, SweepCheck::Thm5, SweepCheck::FlagMng, SweepCheck::Vanishing, SweepCheck::ChordalFree})
        if (to_string(c) == s) return c;
    throw std::invalid_argument("unknown check '" + s + "'");
}

inline std::set<SweepCheck> all_sweep_checks() {
    return {SweepCheck::Thm3, SweepCheck::Thm5, SweepCheck::FlagMng, SweepCheck::Vanishing, SweepCheck::ChordalFree};
}

struct SweepConfig {
    int min_vertices = 1;
    int max_vertices = 5;
    bool dedup_isomorphism = false;
    std::set<SweepCheck> checks = all_sweep_checks();
    /// 0: take MACX_THREADS, else the hardware concurrency.
    unsigned threads = 0;
};

/// Combinatorial deciders used by the sweep; replaceable so that tests can check
/// the harness notices a broken classifier.
struct SweepClassifiers {
    std::function<bool(const SimplicialComplex&)> chordal = [](const SimplicialComplex& k) {
        return is_chordal(one_skeleton(k)).chordal;
    };
    std::function<StarClassification(const SimplicialComplex&)> star = [](const SimplicialComplex& k) {
        return classify_star_condition(k);
    };
};

struct SweepTally {
    std::size_t complexes = 0;
    std::size_t chordal = 0;
    std::size_t star_matches = 0;
    std::size_t one_relator_group = 0;
    std::size_t one_relator_algebra = 0;
    std::size_t minimally_non_golod = 0;

    SweepTally& operator+=(const SweepTally& o) {
        complexes += o.complexes;
        chordal += o.chordal;
        star_matches += o.star_matches;
        one_relator_group += o.one_relator_group;
        one_relator_algebra += o.one_relator_algebra;
        minimally_non_golod += o.minimally_non_golod;
        return *this;
    }
    friend bool operator==(const SweepTally&, const SweepTally&) = default;
};

/// Everything needed to reproduce one disagreement standalone.
struct Counterexample {
    int n = 0;
    std::uint32_t graph_code = 0;
    std::string check;
    std::string detail;
    std::vector<std::vector<int>> facets;
    std::map<std::string, bool> verdicts;
    std::vector<HomologyGroup> h_r;
    BigradedTable h_z;

    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
    std::size_t complexes_checked = 0;
    std::map<int, SweepTally> per_vertex_count;
    std::set<SweepCheck> checks;
    bool dedup_isomorphism = false;
    std::vector<Counterexample> counterexamples;

    bool ok() const { return counterexamples.empty(); }

    SweepTally total() const {
        SweepTally t;
        for (const auto& [n, tally] : per_vertex_count) t += tally;
        return t;
    }
};

namespace detail {

inline unsigned sweep_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MACX_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline bool minimally_non_golod_with(const SimplicialComplex& k, const SweepClassifiers& cls) {
    if (cls.chordal(k)) return false;
    const Mask all = k.vertices().all();
    for (int pos = 0; pos < k.num_vertices(); ++pos)
        if (!cls.chordal(full_subcomplex_mask(k, all & ~bit(pos)))) return false;
    return true;
}

struct SweepWorker {
    const std::set<SweepCheck>& checks;
    const SweepClassifiers& cls;
    HomologyCache cache;
    SweepReport report;

    void visit(int n, std::uint32_t code, const SimplicialComplex& k) {
        const bool need_homology = checks.contains(SweepCheck::Thm3) || checks.contains(SweepCheck::Thm5) ||
                                   checks.contains(SweepCheck::Vanishing) || checks.contains(SweepCheck::ChordalFree) ||
                                   checks.contains(SweepCheck::FlagMng);
        std::optional<HochsterData> h;
        if (need_homology) h.emplace(k, &cache);

        const bool chordal = cls.chordal(k);
        const StarClassification star = cls.star(k);
        SweepTally& tally = report.per_vertex_count[n];
        ++tally.complexes;
        ++report.complexes_checked;
        tally.chordal += chordal;
        tally.star_matches += star.matches;

        auto fail = [&](const std::string& check, std::string detail, std::map<std::string, bool> verdicts) {
            Counterexample c;
            c.n = n;
            c.graph_code = code;
            c.check = check;
            c.detail = std::move(detail);
            c.facets = k.facet_labels();
            c.verdicts = std::move(verdicts);
            if (h) {
                c.h_r = h->h_r;
                c.h_z = h->h_z;
            }
            report.counterexamples.push_back(std::move(c));
        };

        if (checks.contains(SweepCheck::ChordalFree)) {
            const bool free_h = is_free_commutator_group_homological(k, *h);
            const bool no_cycles = find_induced_cycles(one_skeleton(k), 4).empty();
            if (chordal != free_h || chordal != no_cycles)
                fail("chordal_free", "chordal <=> H_{>=2}(R_K) = 0 <=> no induced cycle of length >= 4",
                     {{"chordal", chordal}, {"homologically_free", free_h}, {"no_induced_cycles", no_cycles}});
        }
        if (checks.contains(SweepCheck::Thm3)) {
            const bool hom = one_relator_group_homological(k, *h);
            tally.one_relator_group += hom;
            if (hom != star.matches)
                fail("thm3", "H_2(R_K) = Z <=> condition (*)", {{"star_condition", star.matches}, {"H2_R_is_Z", hom}});
        }
        if (checks.contains(SweepCheck::Vanishing) && star.matches) {
            bool ok = true;
            for (std::size_t d = 3; d < h->h_r.size(); ++d) ok = ok && h->h_r[d].is_zero();
            bool ok_z = true;
            for (const auto& [key, g] : h->h_z.entries())
                if (key.second / 2 - key.first >= 3) ok_z = false;
            if (!ok || !ok_z)
                fail("vanishing", "H_k(R_K) = 0 for k >= 3 and H_{-i,2j}(Z_K) = 0 for j - i >= 3 under (*)",
                     {{"R_vanishing", ok}, {"Z_vanishing", ok_z}});
        }
        if (checks.contains(SweepCheck::Thm5)) {
            const bool alg = one_relator_algebra_homological(k, *h);
            tally.one_relator_algebra += alg;
            if (alg != star.matches)
                fail("thm5", "row H_{2-j,2j}(Z_K) is a single Z <=> condition (*)",
                     {{"star_condition", star.matches}, {"one_relator_row", alg}});
        }
        if (checks.contains(SweepCheck::FlagMng)) {
            const bool mng = minimally_non_golod_with(k, cls);
            tally.minimally_non_golod += mng;
            const bool is_cycle = star.matches && star.cone_vertices.empty();
            if (mng != is_cycle)
                fail("flagmng", "minimally non-Golod <=> K = C_p", {{"minimally_non_golod", mng}, {"is_cycle", is_cycle}});

            const Graph g = one_skeleton(k);
            const Mask rest = k.vertices().all() & ~g.universal_vertices(k.vertices().all());
            const bool core_mng = minimally_non_golod_with(full_subcomplex_mask(k, rest), cls);
            if (core_mng != star.matches)
                fail("flagmng", "(*) <=> K minus its universal vertices is minimally non-Golod",
                     {{"star_condition", star.matches}, {"core_minimally_non_golod", core_mng}});

            const bool golod_h = golod_flag_homological(k, *h);
            if (chordal != golod_h)
                fail("flagmng", "Golod (chordal) <=> H(Z_K) only in the j - i = 1 row",
                     {{"golod_chordal", chordal}, {"golod_homological", golod_h}});
        }
    }
};

} // namespace detail

/// Runs every configured check over all flag complexes with min..max vertices.
inline SweepReport run_sweep(const SweepConfig& cfg, const SweepClassifiers& cls = {}) {
    if (cfg.min_vertices < 1 || cfg.max_vertices > kMaxSweepVertices || cfg.min_vertices > cfg.max_vertices)
        throw std::invalid_argument("sweep vertex range must lie within 1..7");
    const unsigned workers = detail::sweep_threads(cfg.threads);
    std::vector<detail::SweepWorker> states;
    states.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) states.push_back(detail::SweepWorker{cfg.checks, cls, {}, {}});

    auto run = [&](unsigned w) {
        for (int n = cfg.min_vertices; n <= cfg.max_vertices; ++n)
            for_each_flag_complex(
                n, cfg.dedup_isomorphism,
                [&](std::uint32_t code, const SimplicialComplex& k) { states[w].visit(n, code, k); }, w, workers);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    SweepReport out;
    out.checks = cfg.checks;
    out.dedup_isomorphism = cfg.dedup_isomorphism;
    for (auto& s : states) {
        out.complexes_checked += s.report.complexes_checked;
        for (const auto& [n, tally] : s.report.per_vertex_count) out.per_vertex_count[n] += tally;
        for (auto& c : s.report.counterexamples) out.counterexamples.push_back(std::move(c));
    }
    std::sort(out.counterexamples.begin(), out.counterexamples.end(), [](const auto& a, const auto& b) {
        return std::tie(a.n, a.graph_code, a.check, a.detail) < std::tie(b.n, b.graph_code, b.check, b.detail);
    });
    return out;
}

} // namespace macx
