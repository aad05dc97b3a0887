#pragma once

// Loop-space homology of connected sums of sphere products
//
//   M = #_i (S^{d_i} x S^{d-d_i})
//
// H_*(Omega M) is T(a_1, b_1, ..., a_k, b_k) / (sum_i [a_i, b_i]) with
// deg a_i = d_i - 1 and deg b_i = d - d_i - 1. Its Poincare series is computed
// three ways: the closed rational form, counting words that avoid the factor
// a_1 b_1, and the homology of the Adams-Hilton model (T(a, b, z), d).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macx/smith.hpp"

namespace macx {

/// Connected sum of k >= 1 sphere products S^{d_i} x S^{d-d_i} of total dimension d.
class SphereProductSum {
public:
    SphereProductSum(int d, std::vector<int> pairs) : d_(d), pairs_(std::move(pairs)) {
        if (d_ < 4) throw std::invalid_argument("total dimension must be >= 4");
        if (pairs_.empty()) throw std::invalid_argument("connected sum needs at least one summand");
        for (int di : pairs_)
            if (di < 2 || d_ - di < 2) throw std::invalid_argument("each sphere must have dimension >= 2");
        std::sort(pairs_.begin(), pairs_.end());
    }

    int dimension() const { return d_; }
    /// d_i per summand, ascending.
    const std::vector<int>& pairs() const { return pairs_; }
    std::size_t summands() const { return pairs_.size(); }

    /// (d_i, multiplicity) in ascending d_i.
    std::vector<std::pair<int, int>> table() const {
        std::vector<std::pair<int, int>> out;
        for (int di : pairs_) {
            if (!out.empty() && out.back().first == di) ++out.back().second;
            else out.emplace_back(di, 1);
        }
        return out;
    }

    /// Betti numbers b_0 .. b_d.
    std::vector<std::size_t> betti() const {
        std::vector<std::size_t> b(static_cast<std::size_t>(d_ + 1), 0);
        b.front() = b.back() = 1;
        for (int di : pairs_) {
            ++b[static_cast<std::size_t>(di)];
            ++b[static_cast<std::size_t>(d_ - di)];
        }
        return b;
    }

    /// Degrees of the loop generators a_i, b_i (in pair order).
    std::vector<int> generator_degrees() const {
        std::vector<int> out;
        for (int di : pairs_) {
            out.push_back(di - 1);
            out.push_back(d_ - di - 1);
        }
        return out;
    }

    friend bool operator==(const SphereProductSum&, const SphereProductSum&) = default;

private:
    int d_;
    std::vector<int> pairs_;
};

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

/// Z_{C_p} as #_{k=3}^{p-1} (S^k x S^{p+2-k}) with (k-2) C(p-2, k-1) copies of each.
inline SphereProductSum mcgavran(int p) {
    if (p < 4) throw std::invalid_argument("mcgavran needs p >= 4");
    if (p > 16) throw std::invalid_argument("mcgavran: p too large for an explicit summand list");
    std::vector<int> pairs;
    for (int k = 3; k <= p - 1; ++k) {
        const auto copies = static_cast<long long>(BigInt((k - 2) * binomial(p - 2, k - 1)));
        pairs.insert(pairs.end(), static_cast<std::size_t>(copies), k);
    }
    return SphereProductSum(p + 2, std::move(pairs));
}

/// Truncated power series c_0 + c_1 t + ... + c_N t^N.
struct GradedSeries {
    std::vector<BigInt> coefficients;

    int truncation() const { return static_cast<int>(coefficients.size()) - 1; }
    const BigInt& operator[](std::size_t n) const { return coefficients.at(n); }

    GradedSeries truncated(int n) const {
        GradedSeries out;
        out.coefficients.assign(coefficients.begin(),
                                coefficients.begin() + std::min<std::ptrdiff_t>(n + 1, static_cast<std::ptrdiff_t>(coefficients.size())));
        return out;
    }

    /// First degree where the two series differ, over their common truncation.
    std::optional<int> first_difference(const GradedSeries& other) const {
        const std::size_t n = std::min(coefficients.size(), other.coefficients.size());
        for (std::size_t t = 0; t < n; ++t)
            if (coefficients[t] != other.coefficients[t]) return static_cast<int>(t);
        return std::nullopt;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t t = 0; t < coefficients.size(); ++t) out << (t ? "," : "") << coefficients[t];
        return out.str();
    }

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;
};

/// 1 / q(t) truncated at N, for an integer polynomial q with q(0) = 1.
inline GradedSeries inverse_series(const std::vector<long long>& poly, int n) {
    if (n < 0) throw std::invalid_argument("truncation must be >= 0");
    if (poly.empty() || poly[0] != 1) throw std::invalid_argument("constant term must be 1");
    GradedSeries out;
    out.coefficients.assign(static_cast<std::size_t>(n + 1), 0);
    out.coefficients[0] = 1;
    for (int t = 1; t <= n; ++t) {
        BigInt c = 0;
        for (std::size_t s = 1; s < poly.size() && static_cast<int>(s) <= t; ++s)
            c -= BigInt(poly[s]) * out.coefficients[static_cast<std::size_t>(t) - s];
        out.coefficients[static_cast<std::size_t>(t)] = c;
    }
    return out;
}

/// 1 / (1 - sum_g t^{deg g} + t^{relation_degree}): the series of a one-relator algebra with an inert relation.
inline GradedSeries one_relator_series(const std::vector<int>& generator_degrees, int relation_degree, int n) {
    int top = relation_degree;
    for (int g : generator_degrees) top = std::max(top, g);
    std::vector<long long> poly(static_cast<std::size_t>(top + 1), 0);
    poly[0] = 1;
    for (int g : generator_degrees) {
        if (g < 1) throw std::invalid_argument("generator degrees must be >= 1");
        poly[static_cast<std::size_t>(g)] -= 1;
    }
    poly[static_cast<std::size_t>(relation_degree)] += 1;
    return inverse_series(poly, n);
}

/// 1 / (1 - sum_i (t^{d_i-1} + t^{d-d_i-1}) + t^{d-2}).
inline GradedSeries poincare_series_closed(const SphereProductSum& m, int n) {
    return one_relator_series(m.generator_degrees(), m.dimension() - 2, n);
}

inline constexpr int kMaxOracleTruncation = 4096;

/// Counts weighted words in a_1, b_1, ..., a_k, b_k with no consecutive a_s b_s for the
/// designated pair s; dynamic programming over (degree, last letter is a_s).
inline GradedSeries rank_oracle_monomials(const SphereProductSum& m, int n, std::size_t designated = 0) {
    if (n < 0) throw std::invalid_argument("truncation must be >= 0");
    if (n > kMaxOracleTruncation) throw std::length_error("oracle truncation too large");
    if (designated >= m.summands()) throw std::out_of_range("designated pair out of range");
    const auto degs = m.generator_degrees();
    const std::size_t a_special = 2 * designated;
    const std::size_t b_special = a_special + 1;
    // ends_a[t]: words of degree t ending in the special a; other[t]: the rest (including the empty word)
    std::vector<BigInt> ends_a(static_cast<std::size_t>(n + 1), 0), other(static_cast<std::size_t>(n + 1), 0);
    other[0] = 1;
    for (int t = 1; t <= n; ++t) {
        for (std::size_t g = 0; g < degs.size(); ++g) {
            const int prev = t - degs[g];
            if (prev < 0) continue;
            const auto p = static_cast<std::size_t>(prev);
            BigInt ways = g == b_special ? other[p] : BigInt(other[p] + ends_a[p]);
            if (g == a_special) ends_a[static_cast<std::size_t>(t)] += ways;
            else other[static_cast<std::size_t>(t)] += ways;
        }
    }
    GradedSeries out;
    for (int t = 0; t <= n; ++t)
        out.coefficients.push_back(ends_a[static_cast<std::size_t>(t)] + other[static_cast<std::size_t>(t)]);
    return out;
}

// ---------------------------------------------------------------------------
// Free differential graded algebras

using Word = std::vector<std::uint16_t>;

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = w.size();
        for (auto x : w) h = h * 1000003u ^ x;
        return h;
    }
};

/// Integer linear combination of words; zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Word, long long>;

    void add(const Word& w, long long c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    void add(const Polynomial& p, long long scale = 1) {
        for (const auto& [w, c] : p.terms_) add(w, c * scale);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Terms terms_;
};

struct DGGenerator {
    std::string name;
    int degree = 1;
};

/// (T(generators), d) with d of degree -1 extended by d(uv) = d(u) v + (-1)^{|u|} u d(v).
class FreeDGAlgebra {
public:
    std::uint16_t add_generator(std::string name, int degree) {
        if (degree < 1) throw std::invalid_argument("generator degrees must be >= 1");
        gens_.push_back({std::move(name), degree});
        diffs_.emplace_back();
        return static_cast<std::uint16_t>(gens_.size() - 1);
    }

    void set_differential(std::uint16_t g, Polynomial p) {
        for (const auto& [w, c] : p.terms())
            if (degree(w) != gens_.at(g).degree - 1)
                throw std::invalid_argument("differential of " + gens_[g].name + " is not of degree -1");
        diffs_.at(g) = std::move(p);
    }

    const std::vector<DGGenerator>& generators() const { return gens_; }
    const Polynomial& differential(std::uint16_t g) const { return diffs_.at(g); }

    std::optional<std::uint16_t> find(const std::string& name) const {
        for (std::size_t t = 0; t < gens_.size(); ++t)
            if (gens_[t].name == name) return static_cast<std::uint16_t>(t);
        return std::nullopt;
    }

    int degree(const Word& w) const {
        int d = 0;
        for (auto g : w) d += gens_.at(g).degree;
        return d;
    }

    Polynomial apply(const Word& w) const {
        Polynomial out;
        int sign_degree = 0;
        for (std::size_t t = 0; t < w.size(); ++t) {
            const Polynomial& dg = diffs_[w[t]];
            const long long sign = sign_degree % 2 == 0 ? 1 : -1;
            for (const auto& [term, c] : dg.terms()) {
                Word x(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
                x.insert(x.end(), term.begin(), term.end());
                x.insert(x.end(), w.begin() + static_cast<std::ptrdiff_t>(t + 1), w.end());
                out.add(x, sign * c);
            }
            sign_degree += gens_[w[t]].degree;
        }
        return out;
    }

    Polynomial apply(const Polynomial& p) const {
        Polynomial out;
        for (const auto& [w, c] : p.terms()) out.add(apply(w), c);
        return out;
    }

    /// d(d(g)) = 0 for every generator, by expansion through the Leibniz rule.
    bool d_squared_vanishes() const {
        for (std::size_t g = 0; g < gens_.size(); ++g)
            if (!apply(diffs_[g]).is_zero()) return false;
        return true;
    }

    std::string render(const Word& w) const {
        std::string s;
        for (std::size_t t = 0; t < w.size(); ++t) s += (t ? " " : "") + gens_.at(w[t]).name;
        return s.empty() ? "1" : s;
    }

    std::string render(const Polynomial& p) const {
        if (p.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : p.terms()) {
            if (first) s += c < 0 ? "-" : "";
            else s += c < 0 ? " - " : " + ";
            if (c != 1 && c != -1) s += std::to_string(c < 0 ? -c : c) + " ";
            s += render(w);
            first = false;
        }
        return s;
    }

private:
    std::vector<DGGenerator> gens_;
    std::vector<Polynomial> diffs_;
};

/// [u, v] = uv + (-1)^{|u||v|+1} vu for single letters.
inline Polynomial graded_commutator(const FreeDGAlgebra& a, std::uint16_t u, std::uint16_t v) {
    const int du = a.generators().at(u).degree;
    const int dv = a.generators().at(v).degree;
    Polynomial p;
    p.add(Word{u, v}, 1);
    p.add(Word{v, u}, (du * dv + 1) % 2 == 0 ? 1 : -1);
    return p;
}

/// Adams-Hilton model of M (generators a_i, b_i, z with d z = sum [a_i, b_i]); with
/// `half_smash`, the model of M x| S^1, adding x_i, y_i, w with d w = sum [a_i, y_i] + [x_i, b_i].
inline FreeDGAlgebra adams_hilton_model(const SphereProductSum& m, bool half_smash = false) {
    FreeDGAlgebra alg;
    const int d = m.dimension();
    const std::size_t k = m.summands();
    std::vector<std::uint16_t> a(k), b(k), x(k), y(k);
    const bool plain = k == 1;
    auto name = [plain](const char* base, std::size_t i) {
        return plain ? std::string(base) : std::string(base) + std::to_string(i + 1);
    };
    for (std::size_t i = 0; i < k; ++i) {
        const int di = m.pairs()[i];
        a[i] = alg.add_generator(name("a", i), di - 1);
        b[i] = alg.add_generator(name("b", i), d - di - 1);
    }
    if (half_smash) {
        for (std::size_t i = 0; i < k; ++i) {
            const int di = m.pairs()[i];
            x[i] = alg.add_generator(name("x", i), di);
            y[i] = alg.add_generator(name("y", i), d - di);
        }
    }
    const auto z = alg.add_generator("z", d - 1);
    Polynomial dz;
    for (std::size_t i = 0; i < k; ++i) dz.add(graded_commutator(alg, a[i], b[i]));
    alg.set_differential(z, dz);
    if (half_smash) {
        const auto w = alg.add_generator("w", d);
        Polynomial dw;
        for (std::size_t i = 0; i < k; ++i) {
            dw.add(graded_commutator(alg, a[i], y[i]));
            dw.add(graded_commutator(alg, x[i], b[i]));
        }
        alg.set_differential(w, dw);
    }
    return alg;
}

struct DGAHomology {
    /// rank H_n for n = 0..N
    GradedSeries ranks;
    /// degree -> torsion invariant factors (only degrees with torsion appear)
    std::map<int, std::vector<BigInt>> torsion;
};

inline constexpr std::size_t kMaxBasisBlock = 400000;

namespace detail {

// Words of exact degree n containing exactly `weight` heavy letters (weight < 0: any).
inline void enumerate_words(const FreeDGAlgebra& a, const std::vector<bool>& heavy, int n, int weight,
                            std::vector<Word>& out, std::size_t budget) {
    int min_heavy = 0;
    for (std::size_t g = 0; g < heavy.size(); ++g)
        if (heavy[g] && (min_heavy == 0 || a.generators()[g].degree < min_heavy)) min_heavy = a.generators()[g].degree;
    Word cur;
    auto rec = [&](auto&& self, int left, int wleft) -> void {
        if (left == 0) {
            if (wleft <= 0) {
                if (out.size() >= budget) throw std::length_error("DGA basis exceeds budget");
                out.push_back(cur);
            }
            return;
        }
        if (wleft > 0 && left < wleft * min_heavy) return;
        for (std::uint16_t g = 0; g < a.generators().size(); ++g) {
            const int dg = a.generators()[g].degree;
            if (dg > left) continue;
            int wl = wleft;
            if (weight >= 0 && heavy[g]) {
                if (wl == 0) continue;
                --wl;
            }
            cur.push_back(g);
            self(self, left - dg, wl);
            cur.pop_back();
        }
    };
    rec(rec, n, weight >= 0 ? weight : -1);
}

// Number of words of degree n using only light letters.
inline std::vector<BigInt> count_light_words(const FreeDGAlgebra& a, const std::vector<bool>& heavy, int n) {
    std::vector<BigInt> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (int t = 1; t <= n; ++t)
        for (std::size_t g = 0; g < a.generators().size(); ++g) {
            const int dg = a.generators()[g].degree;
            if (!heavy[g] && dg <= t) c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - dg)];
        }
    return c;
}

struct BlockMap {
    std::size_t rank = 0;
    std::vector<BigInt> diagonal;
};

inline BlockMap differential_block(const FreeDGAlgebra& a, const std::vector<Word>& source) {
    BlockMap out;
    if (source.empty()) return out;
    std::unordered_map<Word, std::size_t, WordHash> rows;
    std::vector<Polynomial> images;
    images.reserve(source.size());
    for (const auto& w : source) {
        images.push_back(a.apply(w));
        for (const auto& [t, c] : images.back().terms()) rows.emplace(t, rows.size());
    }
    if (rows.empty()) return out;
    IntMatrix m(rows.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col)
        for (const auto& [t, c] : images[col].terms()) m(rows.at(t), col) = c;
    auto snf = smith_normal_form(m);
    out.rank = snf.rank;
    out.diagonal = std::move(snf.diagonal);
    return out;
}

} // namespace detail

/// Ranks (and torsion) of the homology of A through degree N, by Smith normal form of d on the
/// monomial basis. When every differential of a generator only involves d-closed generators,
/// the chain complex splits by the number of non-closed letters and each block is handled alone.
inline DGAHomology dga_homology_ranks(const FreeDGAlgebra& a, int n, std::size_t budget = kMaxBasisBlock) {
    if (n < 0) throw std::invalid_argument("truncation must be >= 0");
    const std::size_t ng = a.generators().size();
    std::vector<bool> heavy(ng);
    for (std::uint16_t g = 0; g < ng; ++g) heavy[g] = !a.differential(g).is_zero();
    bool split = true;
    for (std::uint16_t g = 0; g < ng; ++g)
        for (const auto& [w, c] : a.differential(g).terms())
            for (auto x : w)
                if (heavy[x]) split = false;

    int min_heavy = 0;
    for (std::uint16_t g = 0; g < ng; ++g)
        if (heavy[g] && (min_heavy == 0 || a.generators()[g].degree < min_heavy)) min_heavy = a.generators()[g].degree;

    DGAHomology out;
    if (!split) {
        // one block per degree
        std::vector<std::size_t> dim(static_cast<std::size_t>(n + 2));
        std::vector<detail::BlockMap> maps(static_cast<std::size_t>(n + 2));
        for (int t = 0; t <= n + 1; ++t) {
            std::vector<Word> basis;
            detail::enumerate_words(a, heavy, t, -1, basis, budget);
            dim[static_cast<std::size_t>(t)] = basis.size();
            maps[static_cast<std::size_t>(t)] = detail::differential_block(a, basis);
        }
        for (int t = 0; t <= n; ++t) {
            const auto u = static_cast<std::size_t>(t);
            out.ranks.coefficients.emplace_back(dim[u] - maps[u].rank - maps[u + 1].rank);
            for (const auto& d : maps[u + 1].diagonal)
                if (d > 1) out.torsion[t].push_back(d);
        }
        return out;
    }

    const auto light = detail::count_light_words(a, heavy, n + 1);
    // rank of d on block (degree t, weight s >= 1)
    std::map<std::pair<int, int>, detail::BlockMap> maps;
    std::map<std::pair<int, int>, std::size_t> dims;
    for (int t = 0; t <= n + 1; ++t) {
        const int max_weight = min_heavy > 0 ? t / min_heavy : 0;
        for (int s = 1; s <= max_weight; ++s) {
            std::vector<Word> basis;
            detail::enumerate_words(a, heavy, t, s, basis, budget);
            dims[{t, s}] = basis.size();
            maps[{t, s}] = detail::differential_block(a, basis);
        }
    }
    auto rank_of = [&](int t, int s) -> std::size_t {
        auto it = maps.find({t, s});
        return it == maps.end() ? 0 : it->second.rank;
    };
    for (int t = 0; t <= n; ++t) {
        BigInt total = light[static_cast<std::size_t>(t)];
        const int max_weight = min_heavy > 0 ? t / min_heavy : 0;
        for (int s = 0; s <= max_weight; ++s) {
            if (s > 0) total += BigInt(dims[{t, s}]) - BigInt(rank_of(t, s));
            total -= BigInt(rank_of(t + 1, s + 1));
            auto it = maps.find({t + 1, s + 1});
            if (it != maps.end())
                for (const auto& d : it->second.diagonal)
                    if (d > 1) out.torsion[t].push_back(d);
        }
        out.ranks.coefficients.push_back(total);
    }
    for (auto& [deg, list] : out.torsion) normalize_invariant_factors(list);
    return out;
}

/// Compares the homology series of the half-smash model against every one-relator series
/// 1 / (1 - sum t^{deg g} + t^r), r = 1..N, on the same closed generators.
struct HalfSmashDeviation {
    GradedSeries homology;
    std::vector<int> closed_generator_degrees;
    /// relation degree r -> first degree where homology differs from the one-relator series (if any)
    std::map<int, std::optional<int>> first_difference;

    bool deviates_from_every_candidate() const {
        for (const auto& [r, diff] : first_difference)
            if (!diff) return false;
        return true;
    }
};

inline HalfSmashDeviation half_smash_deviation(const SphereProductSum& m, int n) {
    const FreeDGAlgebra model = adams_hilton_model(m, true);
    HalfSmashDeviation out;
    out.homology = dga_homology_ranks(model, n).ranks;
    for (std::uint16_t g = 0; g < model.generators().size(); ++g)
        if (model.differential(g).is_zero()) out.closed_generator_degrees.push_back(model.generators()[g].degree);
    for (int r = 1; r <= n; ++r)
        out.first_difference[r] = out.homology.first_difference(one_relator_series(out.closed_generator_degrees, r, n));
    return out;
}

} // namespace macx
