#pragma once

// Freeness, one-relator and Golod properties of flag complexes, each
// decided both combinatorially and from Hochster-decomposed homology.

#include <map>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <sstream>
#include <string>
#include <vector>

#include "macx/homology.hpp"
#include "macx/star_condition.hpp"

namespace macx {

/// Raised by classifiers whose underlying theorems assume a flag complex.
class NotFlagError : public std::domain_error {
public:
    explicit NotFlagError(std::vector<int> witness)
        : std::domain_error("complex is not flag (missing face " + describe(witness) + ")"),
          witness_(std::move(witness)) {}
    const std::vector<int>& witness() const { return witness_; }

private:
    static std::string describe(const std::vector<int>& w) {
        std::string s = "{";
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? "," : "") + std::to_string(w[t]);
        return s + "}";
    }
    std::vector<int> witness_;
};

inline void require_flag(const SimplicialComplex& k) {
    auto f = is_flag(k);
    if (!f.flag) throw NotFlagError(f.witness);
}

/// Homology data shared by the homological classifiers.
struct HochsterData {
    SubcomplexHomology subcomplexes;
    std::vector<HomologyGroup> h_r;
    BigradedTable h_z;

    explicit HochsterData(const SimplicialComplex& k, HomologyCache* cache = nullptr)
        : subcomplexes(k, cache), h_r(homology_R(subcomplexes)), h_z(bigraded_homology_Z(subcomplexes)) {}

    HomologyGroup h_r_at(int k) const {
        return k >= 0 && k < static_cast<int>(h_r.size()) ? h_r[static_cast<std::size_t>(k)] : HomologyGroup{};
    }
};

/// RC'_K is free iff the 1-skeleton is chordal.
inline bool is_free_commutator_group(const SimplicialComplex& k) {
    require_flag(k);
    return is_chordal(one_skeleton(k)).chordal;
}

/// Homological counterpart: a free group has H_k = 0 for k >= 2, and R_K is a K(RC'_K, 1).
inline bool is_free_commutator_group_homological(const SimplicialComplex& k, const HochsterData& h) {
    require_flag(k);
    for (std::size_t d = 2; d < h.h_r.size(); ++d)
        if (!h.h_r[d].is_zero()) return false;
    return true;
}

inline bool one_relator_group_combinatorial(const SimplicialComplex& k) {
    require_flag(k);
    return classify_star_condition(k).matches;
}

/// H_2(R_K) is exactly Z.
inline bool one_relator_group_homological(const SimplicialComplex& k, const HochsterData& h) {
    require_flag(k);
    return h.h_r_at(2).is_integers();
}

inline bool one_relator_group_homological(const SimplicialComplex& k) {
    return one_relator_group_homological(k, HochsterData(k));
}

/// The row H_{2-j,2j}(Z_K) has a single nonzero entry, equal to Z, at some 4 <= j <= m.
inline bool one_relator_algebra_homological(const SimplicialComplex& k, const HochsterData& h) {
    require_flag(k);
    int hits = 0;
    bool ok = true;
    for (int j = 2; j <= k.num_vertices(); ++j) {
        HomologyGroup g = h.h_z.at(j - 2, 2 * j);
        if (g.is_zero()) continue;
        ++hits;
        if (!g.is_integers() || j < 4) ok = false;
    }
    return ok && hits == 1;
}

inline bool one_relator_algebra_homological(const SimplicialComplex& k) {
    return one_relator_algebra_homological(k, HochsterData(k));
}

/// H_k(R_K) = 0 for k >= 3 and H_{-i,2j}(Z_K) = 0 for j - i >= 3. Requires condition (*).
inline bool vanishing_check(const SimplicialComplex& k, const HochsterData& h) {
    if (!classify_star_condition(k).matches)
        throw std::invalid_argument("vanishing_check requires K = C_p or C_p * Delta^q");
    for (std::size_t d = 3; d < h.h_r.size(); ++d)
        if (!h.h_r[d].is_zero()) return false;
    for (const auto& [key, g] : h.h_z.entries()) {
        const int i = key.first, j = key.second / 2;
        if (j - i >= 3 && !g.is_zero()) return false;
    }
    return true;
}

inline bool vanishing_check(const SimplicialComplex& k) { return vanishing_check(k, HochsterData(k)); }

/// For flag K: Golod iff the 1-skeleton is chordal.
inline bool golod_flag(const SimplicialComplex& k) {
    require_flag(k);
    return is_chordal(one_skeleton(k)).chordal;
}

/// Homological counterpart of flag Golodness: H(Z_K) is that of a wedge of spheres coming
/// only from H~_0 of full subcomplexes, i.e. every H_{-i,2j} with j - i >= 2 vanishes.
inline bool golod_flag_homological(const SimplicialComplex& k, const HochsterData& h) {
    require_flag(k);
    for (const auto& [key, g] : h.h_z.entries())
        if (key.second / 2 - key.first >= 2 && !g.is_zero()) return false;
    return true;
}

/// Not Golod, but every vertex deletion K - {i} is Golod.
inline bool minimally_non_golod_flag(const SimplicialComplex& k) {
    if (golod_flag(k)) return false;
    const Mask all = k.vertices().all();
    for (int pos = 0; pos < k.num_vertices(); ++pos)
        if (!golod_flag(full_subcomplex_mask(k, all & ~bit(pos)))) return false;
    return true;
}

/// Genus (p-4) 2^(p-3) + 1 of the surface R_{C_p}.
inline std::uint64_t surface_genus(int p) {
    if (p < 4) throw std::invalid_argument("surface_genus needs p >= 4");
    if (p > 60) throw std::overflow_error("surface_genus overflows 64 bits");
    return static_cast<std::uint64_t>(p - 4) * (std::uint64_t{1} << (p - 3)) + 1;
}

// ---------------------------------------------------------------------------
// One-relator presentation complexes

struct Letter {
    int generator = 1;  // 1-based index of x_i
    int exponent = 1;   // +1 or -1
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over x_1, ..., x_l.
class RelatorWord {
public:
    RelatorWord() = default;

    explicit RelatorWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
        for (std::size_t t = 0; t < letters_.size(); ++t) {
            const auto& a = letters_[t];
            if (a.generator < 1 || (a.exponent != 1 && a.exponent != -1))
                throw std::invalid_argument("letters are x_i^(+1|-1) with i >= 1");
            if (t > 0 && letters_[t - 1].generator == a.generator && letters_[t - 1].exponent == -a.exponent)
                throw std::invalid_argument("relator word is not freely reduced");
        }
    }

    /// Parses "x1 x2 x1^-1 x2^-1"; "x1^2" expands to "x1 x1".
    static RelatorWord parse(const std::string& text) {
        std::vector<Letter> letters;
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) {
            if (tok.size() < 2 || tok[0] != 'x') throw std::invalid_argument("bad letter '" + tok + "'");
            std::size_t caret = tok.find('^');
            int gen = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
            int power = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (power == 0) throw std::invalid_argument("zero exponent in '" + tok + "'");
            for (int t = 0; t < std::abs(power); ++t) letters.push_back({gen, power > 0 ? 1 : -1});
        }
        return RelatorWord(std::move(letters));
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    int max_generator() const {
        int g = 0;
        for (const auto& a : letters_) g = std::max(g, a.generator);
        return g;
    }

    /// Exponent sum of each of x_1..x_l (the abelianized relator).
    std::vector<long long> exponent_sums(int l) const {
        std::vector<long long> e(static_cast<std::size_t>(l), 0);
        for (const auto& a : letters_) e.at(static_cast<std::size_t>(a.generator - 1)) += a.exponent;
        return e;
    }

private:
    std::vector<Letter> letters_;
};

/// Homology of the presentation complex Y of <x_1..x_l | r>: one 0-cell, l 1-cells, one 2-cell
/// attached along r. Cellular d_2 is the exponent-sum vector, d_1 = 0.
inline std::vector<HomologyGroup> y_space_homology(int l, const RelatorWord& r) {
    if (l < 1) throw std::invalid_argument("need at least one generator");
    if (r.empty()) throw std::invalid_argument("relator must be nonempty");
    if (r.max_generator() > l) throw std::invalid_argument("relator uses a generator beyond x_l");
    const auto e = r.exponent_sums(l);
    IntMatrix d2(static_cast<std::size_t>(l), 1);
    for (int t = 0; t < l; ++t) d2(static_cast<std::size_t>(t), 0) = e[static_cast<std::size_t>(t)];
    const SmithForm snf = smith_normal_form(d2);

    std::vector<HomologyGroup> out(3);
    out[0] = free_group_of_rank(1);
    out[1].free_rank = static_cast<std::size_t>(l) - snf.rank;
    for (const auto& d : snf.diagonal)
        if (d > 1) out[1].torsion.push_back(d);
    out[2].free_rank = 1 - snf.rank;  // r in [F,F] iff all exponent sums vanish
    return out;
}

// ---------------------------------------------------------------------------
// Aggregate report

struct ClassificationReport {
    bool flag = false;
    std::vector<int> flag_witness;
    bool chordal = false;
    std::vector<int> chordal_witness;
    StarClassification star_condition;
    // group/algebra properties are only defined for flag complexes
    std::optional<bool> free_group;
    std::optional<bool> one_relator_group;
    std::optional<bool> one_relator_algebra;
    std::optional<bool> golod_flag;
    std::optional<bool> minimally_non_golod_flag;
    std::optional<std::uint64_t> genus;
    /// property name -> human-readable evidence
    std::map<std::string, std::string> witnesses;
};

inline ClassificationReport classify(const SimplicialComplex& k, const HochsterData& h) {
    ClassificationReport rep;
    const auto fc = is_flag(k);
    rep.flag = fc.flag;
    rep.flag_witness = fc.witness;
    const auto ch = is_chordal(one_skeleton(k));
    rep.chordal = ch.chordal;
    rep.chordal_witness = ch.witness_cycle;
    rep.star_condition = classify_star_condition(k);

    auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
        return s + "}";
    };
    if (!rep.flag) rep.witnesses["flag"] = "missing face " + list(fc.witness);
    if (!rep.chordal) rep.witnesses["chordal"] = "induced cycle " + list(ch.witness_cycle);
    rep.witnesses["H_2(R_K)"] = h.h_r_at(2).to_string();
    if (rep.star_condition.matches) {
        rep.witnesses["star_condition"] =
            "cycle " + list(rep.star_condition.cycle) + ", cone " + list(rep.star_condition.cone_vertices);
        rep.genus = surface_genus(rep.star_condition.p);
    } else if (rep.star_condition.reason) {
        rep.witnesses["star_condition"] = to_string(*rep.star_condition.reason);
    }

    if (rep.flag) {
        rep.free_group = is_free_commutator_group(k);
        rep.one_relator_group = one_relator_group_homological(k, h);
        rep.one_relator_algebra = one_relator_algebra_homological(k, h);
        rep.golod_flag = golod_flag(k);
        rep.minimally_non_golod_flag = minimally_non_golod_flag(k);
    }
    return rep;
}

inline ClassificationReport classify(const SimplicialComplex& k) { return classify(k, HochsterData(k)); }

} // namespace macx
