#pragma once

// Test-side reference computations. Each one works from first principles and
// shares no code path with the library beyond the basic containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "macx/macx.hpp"

namespace oracle {

using macx::Mask;

// rank of a dense matrix over GF(p)
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
    auto pw = [p](long long b, long long e) {
        long long r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (auto& row : a)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const long long inv = pw(a[rank][c], p - 2);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long long f = a[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline constexpr long long kBigPrime = 1000003;

// A graded chain complex given by cells with a degree and a sparse differential.
struct Cell {
    int degree;
    int weight;  // extra grading preserved by d (2j for Z_K, 0 otherwise)
};

struct ChainComplex {
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<std::size_t, long long>>> d;  // boundary of each cell

    // rank of homology at (degree, weight) over GF(p)
    std::map<std::pair<int, int>, std::size_t> betti(long long p) const {
        std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
        std::vector<std::size_t> slot(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto& g = groups[{cells[c].degree, cells[c].weight}];
            slot[c] = g.size();
            g.push_back(c);
        }
        auto rank_of_d = [&](int deg, int w) -> std::size_t {
            auto src = groups.find({deg, w});
            auto dst = groups.find({deg - 1, w});
            if (src == groups.end() || dst == groups.end()) return 0;
            std::vector<std::vector<long long>> m(dst->second.size(), std::vector<long long>(src->second.size(), 0));
            for (std::size_t col = 0; col < src->second.size(); ++col)
                for (auto [target, coef] : d[src->second[col]]) m[slot[target]][col] += coef;
            return rank_mod(m, p);
        };
        std::map<std::pair<int, int>, std::size_t> out;
        for (const auto& [key, list] : groups) {
            const std::size_t b = list.size() - rank_of_d(key.first, key.second) - rank_of_d(key.first + 1, key.second);
            if (b) out[key] = b;
        }
        return out;
    }
};

// Cellular chains of Z_K = (D^2, S^1)^K: each coordinate is 1 (0-cell), T (1-cell, dT = 0)
// or D (2-cell, dD = T); D-coordinates must form a face. Weight is 2(#T + #D).
inline ChainComplex moment_angle_chains(const macx::SimplicialComplex& k) {
    const int m = k.num_vertices();
    ChainComplex cc;
    std::map<std::pair<Mask, Mask>, std::size_t> index;  // (T, D)
    for (Mask dset : k.faces())
        for (Mask t = 0; t < (Mask{1} << m); ++t) {
            if (t & dset) continue;
            index[{t, dset}] = cc.cells.size();
            cc.cells.push_back({std::popcount(t) + 2 * std::popcount(dset), 2 * std::popcount(t | dset)});
        }
    cc.d.resize(cc.cells.size());
    for (const auto& [key, c] : index) {
        const auto [t, dset] = key;
        for (int v = 0; v < m; ++v) {
            if (!(dset & (Mask{1} << v))) continue;
            // Koszul sign: odd cells before position v are the T's
            const int before = std::popcount(t & ((Mask{1} << v) - 1));
            const long long sign = before % 2 ? -1 : 1;
            cc.d[c].push_back({index.at({t | (Mask{1} << v), dset & ~(Mask{1} << v)}), sign});
        }
    }
    return cc;
}

// Cubical chains of R_K = (D^1, S^0)^K: coordinates 0, 1 (points) or e (edge, de = 1 - 0);
// the e-coordinates must form a face.
inline ChainComplex real_moment_angle_chains(const macx::SimplicialComplex& k) {
    const int m = k.num_vertices();
    ChainComplex cc;
    std::map<std::pair<Mask, Mask>, std::size_t> index;  // (ones, edges)
    for (Mask e : k.faces())
        for (Mask ones = 0; ones < (Mask{1} << m); ++ones) {
            if (ones & e) continue;
            index[{ones, e}] = cc.cells.size();
            cc.cells.push_back({std::popcount(e), 0});
        }
    cc.d.resize(cc.cells.size());
    for (const auto& [key, c] : index) {
        const auto [ones, e] = key;
        for (int v = 0; v < m; ++v) {
            if (!(e & (Mask{1} << v))) continue;
            const int before = std::popcount(e & ((Mask{1} << v) - 1));
            const long long sign = before % 2 ? -1 : 1;
            const Mask rest = e & ~(Mask{1} << v);
            cc.d[c].push_back({index.at({ones | (Mask{1} << v), rest}), sign});
            cc.d[c].push_back({index.at({ones, rest}), -sign});
        }
    }
    return cc;
}

// Bigraded Betti numbers of Z_K over GF(p): (i, 2j) -> rank, with i = #T.
inline std::map<std::pair<int, int>, std::size_t> bigraded_betti_Z(const macx::SimplicialComplex& k,
                                                                  long long p = kBigPrime) {
    std::map<std::pair<int, int>, std::size_t> out;
    for (const auto& [key, b] : moment_angle_chains(k).betti(p)) {
        // degree = -i + 2j
        const int i = key.second - key.first;
        out[{i, key.second}] += b;
    }
    return out;
}

inline std::vector<std::size_t> betti_R(const macx::SimplicialComplex& k, long long p = kBigPrime) {
    std::vector<std::size_t> out;
    for (const auto& [key, b] : real_moment_angle_chains(k).betti(p)) {
        if (out.size() <= static_cast<std::size_t>(key.first)) out.resize(static_cast<std::size_t>(key.first) + 1);
        out[static_cast<std::size_t>(key.first)] += b;
    }
    return out;
}

// Reduced Betti numbers of a complex over GF(p), from scratch.
inline std::vector<std::size_t> reduced_betti(const macx::SimplicialComplex& k, long long p) {
    ChainComplex cc;
    std::map<Mask, std::size_t> index;
    for (Mask f : k.faces()) {
        index[f] = cc.cells.size();
        cc.cells.push_back({std::popcount(f) - 1, 0});
    }
    cc.d.resize(cc.cells.size());
    for (const auto& [f, c] : index) {
        int t = 0;
        for (int v = 0; v < 32; ++v) {
            if (!(f & (Mask{1} << v))) continue;
            cc.d[c].push_back({index.at(f & ~(Mask{1} << v)), t % 2 ? -1 : 1});
            ++t;
        }
    }
    std::vector<std::size_t> out(static_cast<std::size_t>(std::max(k.dimension(), 0) + 1), 0);
    for (const auto& [key, b] : cc.betti(p))
        if (key.first >= 0) out[static_cast<std::size_t>(key.first)] = b;
    return out;
}

// All subsets of size >= 3 whose proper subsets are faces but which are not faces.
inline std::vector<Mask> missing_faces(const macx::SimplicialComplex& k) {
    std::vector<Mask> out;
    const Mask all = k.vertices().all();
    for (Mask s = 1; s <= all; ++s) {
        if (std::popcount(s) < 3 || k.contains(s)) continue;
        bool boundary = true;
        for (Mask r = s; r; r &= r - 1)
            if (!k.contains(s & ~(r & -r))) boundary = false;
        if (boundary) out.push_back(s);
    }
    return out;
}

// induced subgraph on s is connected and 2-regular with at least min_len vertices
inline bool is_induced_cycle(const macx::Graph& g, Mask s, int min_len = 4) {
    if (std::popcount(s) < min_len) return false;
    for (Mask r = s; r; r &= r - 1) {
        const int v = std::countr_zero(r);
        if (std::popcount(g.neighbours(v) & s) != 2) return false;
    }
    Mask seen = s & -s, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask r = frontier; r; r &= r - 1) next |= g.neighbours(std::countr_zero(r)) & s;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == s;
}

inline bool has_induced_cycle(const macx::Graph& g) {
    for (Mask s = 1; s <= g.vertices().all(); ++s)
        if (is_induced_cycle(g, s)) return true;
    return false;
}

// number of unlabelled graphs on n vertices, by Burnside
inline std::uint64_t unlabelled_graphs(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t total = 0, count = 0;
    do {
        std::set<std::pair<int, int>> seen;
        int orbits = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (seen.contains({a, b})) continue;
                ++orbits;
                int x = a, y = b;
                do {
                    seen.insert({std::min(x, y), std::max(x, y)});
                    x = perm[static_cast<std::size_t>(x)];
                    y = perm[static_cast<std::size_t>(y)];
                } while (std::min(x, y) != a || std::max(x, y) != b);
            }
        total += std::uint64_t{1} << orbits;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / count;
}

// Series coefficients from the recurrence c_n = sum_g c_{n - deg g} - c_{n - r}.
inline std::vector<long long> recurrence_series(const std::vector<int>& gen_degrees, int r, int n) {
    std::vector<long long> c(static_cast<std::size_t>(n + 1), 0);
    c[0] = 1;
    for (int t = 1; t <= n; ++t) {
        long long v = 0;
        for (int g : gen_degrees)
            if (t >= g) v += c[static_cast<std::size_t>(t - g)];
        if (t >= r) v -= c[static_cast<std::size_t>(t - r)];
        c[static_cast<std::size_t>(t)] = v;
    }
    return c;
}

// Explicit listing of words over letters with given degrees that avoid the factor (first, second).
inline std::vector<long long> count_avoiding_words(const std::vector<int>& degrees, int first, int second, int n) {
    std::vector<long long> out(static_cast<std::size_t>(n + 1), 0);
    std::vector<int> word;
    auto rec = [&](auto&& self, int weight) -> void {
        ++out[static_cast<std::size_t>(weight)];
        for (int l = 0; l < static_cast<int>(degrees.size()); ++l) {
            if (weight + degrees[static_cast<std::size_t>(l)] > n) continue;
            if (!word.empty() && word.back() == first && l == second) continue;
            word.push_back(l);
            self(self, weight + degrees[static_cast<std::size_t>(l)]);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Homology ranks over GF(p) of a free DGA, using the full word basis in each degree.
inline std::vector<std::size_t> dga_ranks_full(const macx::FreeDGAlgebra& a, int n, long long p = kBigPrime) {
    std::vector<std::vector<macx::Word>> basis(static_cast<std::size_t>(n + 2));
    macx::Word w;
    auto rec = [&](auto&& self, int deg) -> void {
        basis[static_cast<std::size_t>(deg)].push_back(w);
        for (std::uint16_t g = 0; g < a.generators().size(); ++g) {
            const int nd = deg + a.generators()[g].degree;
            if (nd > n + 1) continue;
            w.push_back(g);
            self(self, nd);
            w.pop_back();
        }
    };
    rec(rec, 0);
    auto rank_d = [&](int t) -> std::size_t {  // d : C_t -> C_{t-1}
        if (t < 1 || t > n + 1) return 0;
        const auto& src = basis[static_cast<std::size_t>(t)];
        const auto& dst = basis[static_cast<std::size_t>(t - 1)];
        std::map<macx::Word, std::size_t> pos;
        for (std::size_t r = 0; r < dst.size(); ++r) pos[dst[r]] = r;
        std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
            const macx::Polynomial image = a.apply(src[c]);
            for (const auto& [word, coef] : image.terms()) m[pos.at(word)][c] += coef;
        }
        return rank_mod(m, p);
    };
    std::vector<std::size_t> out;
    for (int t = 0; t <= n; ++t) out.push_back(basis[static_cast<std::size_t>(t)].size() - rank_d(t) - rank_d(t + 1));
    return out;
}

// Random complex on m vertices from a handful of random facets.
inline macx::SimplicialComplex random_complex(std::mt19937& rng, int m, int facets, int max_size) {
    std::uniform_int_distribution<int> vertex(1, m), size(1, max_size);
    std::vector<std::vector<int>> fs;
    for (int f = 0; f < facets; ++f) {
        std::set<int> s;
        const int want = std::min(size(rng), m);
        while (static_cast<int>(s.size()) < want) s.insert(vertex(rng));
        fs.emplace_back(s.begin(), s.end());
    }
    return macx::SimplicialComplex::from_facets(m, fs);
}

inline macx::SimplicialComplex random_flag_complex(std::mt19937& rng, int m, double edge_prob) {
    std::bernoulli_distribution coin(edge_prob);
    macx::Graph g(macx::VertexSet::range(m));
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return macx::clique_complex(g);
}

} // namespace oracle
