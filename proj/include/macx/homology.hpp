#pragma once

// Integral simplicial homology and the Hochster-type decompositions
//
//   H_k(R_K)        = sum over J of  H~_{k-1}(K_J)
//   H_{-i,2j}(Z_K)  = sum over |J| = j of  H~_{j-i-1}(K_J)
//
// Both are assembled from the reduced homology of all 2^m full subcomplexes.

#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "macx/simplicial_complex.hpp"
#include "macx/smith.hpp"

namespace macx {

/// Finitely generated abelian group Z^rank + Z/t_1 + ... with t_1 | t_2 | ...
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    /// Exactly Z: rank one, no torsion.
    bool is_integers() const { return free_rank == 1 && torsion.empty(); }

    HomologyGroup& operator+=(const HomologyGroup& other) {
        free_rank += other.free_rank;
        if (!other.torsion.empty()) {
            torsion.insert(torsion.end(), other.torsion.begin(), other.torsion.end());
            normalize_invariant_factors(torsion);
            std::erase_if(torsion, [](const BigInt& t) { return t == 1; });
        }
        return *this;
    }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;

    /// "0", "Z", "Z^3", "Z + Z/2", "Z/2 + Z/4", ...
    std::string to_string() const {
        std::ostringstream out;
        bool first = true;
        if (free_rank > 0) {
            out << 'Z';
            if (free_rank > 1) out << '^' << free_rank;
            first = false;
        }
        for (const auto& t : torsion) {
            if (!first) out << " + ";
            out << "Z/" << t;
            first = false;
        }
        return first ? "0" : out.str();
    }
};

inline HomologyGroup free_group_of_rank(std::size_t r) { return HomologyGroup{r, {}}; }

/// Reduced homology H~_n for n >= 0, plus the H~_{-1} = Z of the void complex.
struct ReducedHomology {
    /// True iff the complex has no vertices, in which case H~_{-1} = Z.
    bool void_complex = false;
    /// H~_0, H~_1, ..., H~_dim.
    std::vector<HomologyGroup> groups;

    HomologyGroup at(int n) const {
        if (n == -1) return void_complex ? free_group_of_rank(1) : HomologyGroup{};
        if (n < -1 || n >= static_cast<int>(groups.size())) return {};
        return groups[static_cast<std::size_t>(n)];
    }

    bool acyclic() const {
        if (void_complex) return false;
        for (const auto& g : groups)
            if (!g.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;
};

namespace detail {

// faces of one dimension, ascending by mask, with a reverse index
struct FaceIndex {
    std::vector<Mask> faces;
    std::unordered_map<Mask, std::size_t> index;
};

inline std::vector<FaceIndex> faces_by_dimension(const std::vector<Mask>& faces) {
    int top = -1;
    for (Mask f : faces) top = std::max(top, popcount(f) - 1);
    std::vector<FaceIndex> out(static_cast<std::size_t>(top + 2));  // slot 0 holds the empty face
    for (Mask f : faces) {
        auto& slot = out[static_cast<std::size_t>(popcount(f))];
        slot.index.emplace(f, slot.faces.size());
        slot.faces.push_back(f);
    }
    return out;
}

// boundary from slot k+1 (k-faces) to slot k ((k-1)-faces); slot 0 is the augmentation target
inline IntMatrix boundary_between(const FaceIndex& target, const FaceIndex& source) {
    IntMatrix m(target.faces.size(), source.faces.size());
    for (std::size_t c = 0; c < source.faces.size(); ++c) {
        Mask f = source.faces[c];
        int t = 0;
        for (Mask rest = f; rest != 0; rest &= rest - 1, ++t) {
            Mask face = f & ~(rest & -rest);
            m(target.index.at(face), c) = (t % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// Reduced homology from a downward-closed face list that contains the empty face.
inline ReducedHomology reduced_homology_of_faces(const std::vector<Mask>& faces) {
    ReducedHomology out;
    auto slots = faces_by_dimension(faces);
    const int top = static_cast<int>(slots.size()) - 2;  // dimension
    if (top < 0) {
        out.void_complex = true;
        return out;
    }
    // ranks and invariant factors of d_k : C_k -> C_{k-1}, k = 0..top (d_0 is augmentation)
    std::vector<SmithForm> snf(static_cast<std::size_t>(top + 2));
    for (int k = 0; k <= top; ++k) {
        snf[static_cast<std::size_t>(k)] =
            smith_normal_form(boundary_between(slots[static_cast<std::size_t>(k)], slots[static_cast<std::size_t>(k + 1)]));
    }
    for (int n = 0; n <= top; ++n) {
        HomologyGroup h;
        const std::size_t cn = slots[static_cast<std::size_t>(n + 1)].faces.size();
        const std::size_t rank_out = snf[static_cast<std::size_t>(n)].rank;
        const SmithForm& in = snf[static_cast<std::size_t>(n + 1)];
        h.free_rank = cn - rank_out - in.rank;
        for (const auto& d : in.diagonal)
            if (d > 1) h.torsion.push_back(d);
        out.groups.push_back(std::move(h));
    }
    return out;
}

} // namespace detail

/// Matrix of d_k from oriented k-faces (ascending vertices, columns ascending by mask) to (k-1)-faces.
/// For k = 0 the target is the single augmentation row.
inline IntMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
    if (dim < 0) throw std::invalid_argument("boundary dimension must be >= 0");
    detail::FaceIndex source, target;
    for (Mask f : k.faces()) {
        if (popcount(f) == dim + 1) {
            source.index.emplace(f, source.faces.size());
            source.faces.push_back(f);
        } else if (popcount(f) == dim) {
            target.index.emplace(f, target.faces.size());
            target.faces.push_back(f);
        }
    }
    return detail::boundary_between(target, source);
}

inline ReducedHomology reduced_homology(const SimplicialComplex& k) {
    return detail::reduced_homology_of_faces(k.faces());
}

/// Memo for reduced homology keyed by a complex's face list (after relabelling onto 0..n-1).
/// Not synchronized; use one per thread.
class HomologyCache {
public:
    const ReducedHomology& get(const std::vector<Mask>& normalized_faces) {
        auto it = memo_.find(normalized_faces);
        if (it != memo_.end()) return it->second;
        return memo_.emplace(normalized_faces, detail::reduced_homology_of_faces(normalized_faces)).first->second;
    }
    std::size_t size() const { return memo_.size(); }

private:
    struct Hash {
        std::size_t operator()(const std::vector<Mask>& v) const {
            std::size_t h = v.size();
            for (Mask x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };
    std::unordered_map<std::vector<Mask>, ReducedHomology, Hash> memo_;
};

/// Reduced homology of every full subcomplex K_J, indexed by the position mask J.
class SubcomplexHomology {
public:
    SubcomplexHomology() = default;

    explicit SubcomplexHomology(const SimplicialComplex& k, HomologyCache* cache = nullptr) : m_(k.num_vertices()) {
        const Mask all = k.vertices().all();
        table_.resize(static_cast<std::size_t>(all) + 1);
        std::vector<Mask> kept;
        for (Mask j = 0;; ++j) {
            kept.clear();
            for (Mask f : k.faces())
                if ((f & ~j) == 0) kept.push_back(compress(f, j));
            std::sort(kept.begin(), kept.end());
            // the whole complex is rarely seen twice, so it skips the memo
            table_[j] = cache && j != all ? cache->get(kept) : detail::reduced_homology_of_faces(kept);
            if (j == all) break;
        }
    }

    int num_vertices() const { return m_; }
    const ReducedHomology& of(Mask j) const { return table_.at(j); }

private:
    int m_ = 0;
    std::vector<ReducedHomology> table_;
};

/// H_k(R_K) for k = 0 .. dim K + 1.
inline std::vector<HomologyGroup> homology_R(const SubcomplexHomology& sub) {
    const Mask all = full_mask(sub.num_vertices());
    std::vector<HomologyGroup> out;
    for (Mask j = 0;; ++j) {
        const auto& h = sub.of(j);
        if (h.void_complex) {
            if (out.empty()) out.resize(1);
            out[0] += free_group_of_rank(1);
        }
        for (std::size_t n = 0; n < h.groups.size(); ++n) {
            if (out.size() < n + 2) out.resize(n + 2);
            out[n + 1] += h.groups[n];
        }
        if (j == all) break;
    }
    return out;
}

inline std::vector<HomologyGroup> homology_R(const SimplicialComplex& k) { return homology_R(SubcomplexHomology(k)); }

/// Table of H_{-i,2j}(Z_K), keyed by (i, 2j); absent entries are zero.
class BigradedTable {
public:
    using Key = std::pair<int, int>;

    HomologyGroup at(int i, int j2) const {
        auto it = entries_.find({i, j2});
        return it == entries_.end() ? HomologyGroup{} : it->second;
    }

    void add(int i, int j2, const HomologyGroup& g) {
        if (g.is_zero()) return;
        entries_[{i, j2}] += g;
    }

    /// Nonzero entries ordered by (i, 2j).
    const std::map<Key, HomologyGroup>& entries() const { return entries_; }

    /// Groups of total degree k = -i + 2j summed.
    HomologyGroup total_degree(int k) const {
        HomologyGroup out;
        for (const auto& [key, g] : entries_)
            if (-key.first + key.second == k) out += g;
        return out;
    }

    int max_total_degree() const {
        int top = 0;
        for (const auto& [key, g] : entries_) top = std::max(top, -key.first + key.second);
        return top;
    }

    friend bool operator==(const BigradedTable&, const BigradedTable&) = default;

private:
    std::map<Key, HomologyGroup> entries_;
};

inline BigradedTable bigraded_homology_Z(const SubcomplexHomology& sub) {
    BigradedTable table;
    const Mask all = full_mask(sub.num_vertices());
    for (Mask jmask = 0;; ++jmask) {
        const auto& h = sub.of(jmask);
        const int j = popcount(jmask);
        // H~_{j-i-1}(K_J) sits at (i, 2j)
        if (h.void_complex) table.add(0, 0, free_group_of_rank(1));
        for (std::size_t n = 0; n < h.groups.size(); ++n) {
            const int i = j - 1 - static_cast<int>(n);
            table.add(i, 2 * j, h.groups[n]);
        }
        if (jmask == all) break;
    }
    return table;
}

inline BigradedTable bigraded_homology_Z(const SimplicialComplex& k) {
    return bigraded_homology_Z(SubcomplexHomology(k));
}

/// Full groups H_k(Z_K), k = 0 .. top degree.
inline std::vector<HomologyGroup> homology_Z(const BigradedTable& table) {
    std::vector<HomologyGroup> out(static_cast<std::size_t>(table.max_total_degree() + 1));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = table.total_degree(static_cast<int>(k));
    return out;
}

/// Betti numbers b_k = rank H_k(Z_K).
inline std::vector<std::size_t> betti_Z(const BigradedTable& table) {
    std::vector<std::size_t> out;
    for (const auto& g : homology_Z(table)) out.push_back(g.free_rank);
    return out;
}

inline std::vector<std::size_t> betti_Z(const SimplicialComplex& k) { return betti_Z(bigraded_homology_Z(k)); }

} // namespace macx
