#pragma once

// JSON serialization of homology tables, classification reports, generator
// sets, series and sweep reports. Objects use nlohmann::json's default
// ordered-by-key maps, so output is byte-stable for fixed input.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "macx/classifier.hpp"
#include "macx/enumeration.hpp"
#include "macx/generators.hpp"
#include "macx/loop_algebra.hpp"

namespace macx {

using json = nlohmann::json;

inline json big_to_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline json torsion_to_json(const std::vector<BigInt>& t) {
    json out = json::array();
    for (const auto& x : t) out.push_back(big_to_json(x));
    return out;
}

inline json series_to_json(const GradedSeries& s) {
    json out = json::array();
    for (const auto& c : s.coefficients) out.push_back(big_to_json(c));
    return out;
}

/// {"complex", "H_R": [{k, rank, torsion}], "H_Z_bigraded": [{i, j2, rank, torsion}], "betti_Z": [...]}
inline json homology_report(const std::string& name, const std::vector<HomologyGroup>& h_r, const BigradedTable& h_z) {
    json out;
    out["complex"] = name;
    json hr = json::array();
    for (std::size_t k = 0; k < h_r.size(); ++k)
        hr.push_back({{"k", k}, {"rank", h_r[k].free_rank}, {"torsion", torsion_to_json(h_r[k].torsion)}});
    out["H_R"] = hr;
    json hz = json::array();
    for (const auto& [key, g] : h_z.entries())
        hz.push_back({{"i", key.first}, {"j2", key.second}, {"rank", g.free_rank}, {"torsion", torsion_to_json(g.torsion)}});
    out["H_Z_bigraded"] = hz;
    out["betti_Z"] = betti_Z(h_z);
    return out;
}

inline json star_to_json(const StarClassification& s) {
    json out;
    out["matches"] = s.matches;
    if (s.matches) {
        out["p"] = s.p;
        out["q"] = s.q();
        out["cone_vertices"] = s.cone_vertices;
        out["cycle"] = s.cycle;
    } else if (s.reason) {
        out["reason"] = to_string(*s.reason);
    }
    return out;
}

inline json classification_to_json(const ClassificationReport& r) {
    auto opt = [](const auto& o) -> json { return o ? json(*o) : json(nullptr); };
    json out;
    out["flag"] = r.flag;
    out["chordal"] = r.chordal;
    out["free_group"] = opt(r.free_group);
    out["one_relator_group"] = opt(r.one_relator_group);
    out["one_relator_algebra"] = opt(r.one_relator_algebra);
    out["golod_flag"] = opt(r.golod_flag);
    out["minimally_non_golod_flag"] = opt(r.minimally_non_golod_flag);
    out["genus"] = opt(r.genus);
    out["star_condition"] = star_to_json(r.star_condition);
    out["witnesses"] = r.witnesses;
    return out;
}

inline json generators_to_json(const GeneratorSet& set) {
    json words = json::array();
    for (const auto& w : set.words)
        words.push_back({{"prefix", w.prefix}, {"j", w.j}, {"i", w.i}, {"word", render_word(w)}});
    return {{"count", set.count()}, {"words", words}};
}

inline json mcgavran_to_json(int p, const SphereProductSum& m) {
    json table = json::array();
    for (auto [di, mult] : m.table())
        table.push_back({{"k", di}, {"other", m.dimension() - di}, {"copies", mult}});
    return {{"p", p}, {"dimension", m.dimension()}, {"summands", m.summands()}, {"table", table}, {"betti", m.betti()}};
}

inline json counterexample_to_json(const Counterexample& c) {
    json out = homology_report("graph " + std::to_string(c.graph_code), c.h_r, c.h_z);
    out["n"] = c.n;
    out["graph_code"] = c.graph_code;
    out["check"] = c.check;
    out["detail"] = c.detail;
    out["facets"] = c.facets;
    out["verdicts"] = c.verdicts;
    return out;
}

inline json tally_to_json(const SweepTally& t) {
    return {{"complexes", t.complexes},
            {"chordal", t.chordal},
            {"star_matches", t.star_matches},
            {"one_relator_group", t.one_relator_group},
            {"one_relator_algebra", t.one_relator_algebra},
            {"minimally_non_golod", t.minimally_non_golod}};
}

inline json sweep_to_json(const SweepReport& r) {
    json out;
    out["complexes_checked"] = r.complexes_checked;
    out["dedup_isomorphism"] = r.dedup_isomorphism;
    json checks = json::array();
    for (auto c : r.checks) checks.push_back(to_string(c));
    out["checks"] = checks;
    json per = json::object();
    for (const auto& [n, t] : r.per_vertex_count) per[std::to_string(n)] = tally_to_json(t);
    out["per_vertex_count"] = per;
    out["total"] = tally_to_json(r.total());
    json ce = json::array();
    for (const auto& c : r.counterexamples) ce.push_back(counterexample_to_json(c));
    out["counterexamples"] = ce;
    return out;
}

} // namespace macx
