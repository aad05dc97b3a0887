#pragma once

// Finite simplicial complexes on labelled vertex sets.
//
// Faces are bitmasks over vertex positions. The downward closure is
// materialized at construction, so membership is a hash lookup and the
// face list is sorted by bitmask value (the empty face comes first).

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "macx/graph.hpp"
#include "macx/vertex_set.hpp"

namespace macx {

class SimplicialComplex {
public:
    /// The empty complex on no vertices (its only face is the empty set).
    SimplicialComplex() { build(VertexSet{}, {}); }

    /// Downward closure of `facets` (label lists) together with every singleton of `vertices`.
    static SimplicialComplex from_facets(VertexSet vertices, const std::vector<std::vector<int>>& facets) {
        std::vector<Mask> gens;
        gens.reserve(facets.size());
        for (const auto& f : facets) gens.push_back(vertices.mask_of(f));
        return from_masks(std::move(vertices), gens);
    }

    /// Same, on the labels 1..m.
    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
        return from_facets(VertexSet::range(m), facets);
    }

    /// Downward closure of generating faces given as position masks.
    static SimplicialComplex from_masks(VertexSet vertices, const std::vector<Mask>& generators) {
        const Mask all = vertices.all();
        for (Mask g : generators)
            if ((g & ~all) != 0) throw std::out_of_range("face uses a vertex outside the vertex set");
        SimplicialComplex k;
        k.build(std::move(vertices), generators);
        return k;
    }

    /// Boundary of a p-gon on labels 1..p.
    static SimplicialComplex cycle(int p) {
        if (p < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
        std::vector<Mask> edges;
        for (int t = 0; t < p; ++t) edges.push_back(bit(t) | bit((t + 1) % p));
        return from_masks(VertexSet::range(p), edges);
    }

    /// The full simplex on labels 1..q+1; q = -1 gives the empty complex.
    static SimplicialComplex simplex(int q) {
        if (q < -1) throw std::invalid_argument("simplex dimension must be >= -1");
        return from_masks(VertexSet::range(q + 1), {full_mask(q + 1)});
    }

    const VertexSet& vertices() const { return vertices_; }
    int num_vertices() const { return vertices_.size(); }

    bool contains(Mask face) const { return lookup_.contains(face); }
    bool contains_labels(const std::vector<int>& labels) const {
        for (int l : labels)
            if (!vertices_.contains(l)) return false;
        return contains(vertices_.mask_of(labels));
    }

    /// All faces including the empty one, ascending by mask.
    const std::vector<Mask>& faces() const { return faces_; }
    /// Inclusion-maximal faces, ascending by mask.
    const std::vector<Mask>& facets() const { return facets_; }

    /// Largest face size minus one; -1 when only the empty face exists.
    int dimension() const { return dimension_; }

    std::vector<Mask> faces_of_dim(int k) const {
        std::vector<Mask> out;
        for (Mask f : faces_)
            if (popcount(f) == k + 1) out.push_back(f);
        return out;
    }

    std::size_t num_faces_of_dim(int k) const {
        return static_cast<std::size_t>(
            std::count_if(faces_.begin(), faces_.end(), [k](Mask f) { return popcount(f) == k + 1; }));
    }

    /// Facets as label lists.
    std::vector<std::vector<int>> facet_labels() const {
        std::vector<std::vector<int>> out;
        for (Mask f : facets_) out.push_back(vertices_.labels_of(f));
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertices_ == b.vertices_ && a.faces_ == b.faces_;
    }

private:
    void build(VertexSet vertices, const std::vector<Mask>& generators) {
        vertices_ = std::move(vertices);
        lookup_.clear();
        lookup_.insert(0);
        for (int pos = 0; pos < vertices_.size(); ++pos) lookup_.insert(bit(pos));
        for (Mask g : generators) {
            if (lookup_.contains(g)) continue;
            // every submask of g, including g itself
            for (Mask s = g;; s = (s - 1) & g) {
                lookup_.insert(s);
                if (s == 0) break;
            }
        }
        faces_.assign(lookup_.begin(), lookup_.end());
        std::sort(faces_.begin(), faces_.end());
        facets_.clear();
        dimension_ = -1;
        const Mask all = vertices_.all();
        for (Mask f : faces_) {
            dimension_ = std::max(dimension_, popcount(f) - 1);
            bool maximal = true;
            for (Mask rest = all & ~f; rest != 0; rest &= rest - 1) {
                if (lookup_.contains(f | (rest & -rest))) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) facets_.push_back(f);
        }
    }

    VertexSet vertices_;
    std::unordered_set<Mask> lookup_;
    std::vector<Mask> faces_;
    std::vector<Mask> facets_;
    int dimension_ = -1;
};

/// Faces of K inside the vertex subset J (a position mask), relabelled onto J.
inline SimplicialComplex full_subcomplex_mask(const SimplicialComplex& k, Mask j) {
    if ((j & ~k.vertices().all()) != 0) throw std::out_of_range("J is not a subset of the vertex set");
    std::vector<Mask> kept;
    for (Mask f : k.faces())
        if ((f & ~j) == 0) kept.push_back(compress(f, j));
    return SimplicialComplex::from_masks(k.vertices().subset(j), kept);
}

/// Full subcomplex K_J for a list of vertex labels.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<int>& j) {
    return full_subcomplex_mask(k, k.vertices().mask_of(j));
}

/// lk_K(j): faces I with j not in I and I + j in K, on the vertices adjacent to j.
inline SimplicialComplex link(const SimplicialComplex& k, int label) {
    auto pos = k.vertices().position(label);
    if (!pos) throw std::out_of_range("vertex " + std::to_string(label) + " is not in the complex");
    const Mask v = bit(*pos);
    Mask support = 0;
    std::vector<Mask> kept;
    for (Mask f : k.faces()) {
        if ((f & v) == 0 && k.contains(f | v)) {
            kept.push_back(f);
            support |= f;
        }
    }
    for (Mask& f : kept) f = compress(f, support);
    return SimplicialComplex::from_masks(k.vertices().subset(support), kept);
}

/// st_K(j) = lk_K(j) * j, on the link's vertices together with j.
inline SimplicialComplex star(const SimplicialComplex& k, int label) {
    auto pos = k.vertices().position(label);
    if (!pos) throw std::out_of_range("vertex " + std::to_string(label) + " is not in the complex");
    const Mask v = bit(*pos);
    Mask support = v;
    std::vector<Mask> kept;
    for (Mask f : k.faces()) {
        if (k.contains(f | v)) {
            kept.push_back(f | v);
            support |= f;
        }
    }
    for (Mask& f : kept) f = compress(f, support);
    return SimplicialComplex::from_masks(k.vertices().subset(support), kept);
}

/// Join K * L. The result lives on labels 1..m+n: K's vertices first, then L's, each in order.
inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const int m = k.num_vertices();
    const int n = l.num_vertices();
    if (m + n > kMaxVertices) throw std::invalid_argument("join exceeds the vertex bound");
    std::vector<Mask> gens;
    for (Mask a : k.facets())
        for (Mask b : l.facets()) gens.push_back(a | (b << m));
    return SimplicialComplex::from_masks(VertexSet::range(m + n), gens);
}

/// Same complex with vertex labels replaced position-wise by `labels` (which must be distinct).
inline SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != k.num_vertices()) throw std::invalid_argument("label count mismatch");
    VertexSet target(labels);
    // positions in the new (sorted) set
    std::vector<int> to_pos(labels.size());
    for (std::size_t t = 0; t < labels.size(); ++t) to_pos[t] = *target.position(labels[t]);
    std::vector<Mask> gens;
    for (Mask f : k.facets()) {
        Mask g = 0;
        for (int p : positions(f)) g |= bit(to_pos[static_cast<std::size_t>(p)]);
        gens.push_back(g);
    }
    return SimplicialComplex::from_masks(std::move(target), gens);
}

inline Graph one_skeleton(const SimplicialComplex& k) {
    Graph g(k.vertices());
    for (Mask f : k.faces())
        if (popcount(f) == 2) g.add_edge(lowest_bit(f), highest_bit(f));
    return g;
}

inline constexpr std::size_t kCliqueFaceBudget = std::size_t{1} << 22;

/// Complex whose faces are the cliques of g.
inline SimplicialComplex clique_complex(const Graph& g, std::size_t face_budget = kCliqueFaceBudget) {
    // maximal cliques by Bron-Kerbosch with pivoting; the closure adds their subsets
    std::vector<Mask> maximal;
    auto bron_kerbosch = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
        if (p == 0 && x == 0) {
            maximal.push_back(r);
            return;
        }
        Mask px = p | x;
        int pivot = lowest_bit(px);
        int best = -1;
        for (int u : positions(px)) {
            int c = popcount(p & g.neighbours(u));
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (int v : positions(p & ~g.neighbours(pivot))) {
            self(self, r | bit(v), p & g.neighbours(v), x & g.neighbours(v));
            p &= ~bit(v);
            x |= bit(v);
        }
    };
    bron_kerbosch(bron_kerbosch, 0, g.vertices().all(), 0);
    std::size_t estimate = 0;
    for (Mask c : maximal) {
        estimate += std::size_t{1} << popcount(c);
        if (estimate > face_budget) throw std::length_error("clique complex exceeds the face-count budget");
    }
    return SimplicialComplex::from_masks(g.vertices(), maximal);
}

struct FlagCheck {
    bool flag = true;
    /// A missing face with at least 3 vertices (labels) when not flag.
    std::vector<int> witness;
};

/// Flagness: every missing face has exactly two vertices.
inline FlagCheck is_flag(const SimplicialComplex& k) {
    // A missing face of size >= 3 is a non-face F + v whose codimension-one faces are all present.
    std::optional<Mask> best;
    const Mask all = k.vertices().all();
    for (Mask f : k.faces()) {
        if (popcount(f) < 2) continue;
        for (Mask rest = all & ~f & ~full_mask(highest_bit(f) + 1); rest != 0; rest &= rest - 1) {
            Mask cand = f | (rest & -rest);
            if (k.contains(cand)) continue;
            bool missing = true;
            for (Mask r = cand; r != 0; r &= r - 1) {
                if (!k.contains(cand & ~(r & -r))) {
                    missing = false;
                    break;
                }
            }
            if (missing && (!best || popcount(cand) < popcount(*best) ||
                            (popcount(cand) == popcount(*best) && cand < *best)))
                best = cand;
        }
    }
    FlagCheck out;
    if (best) {
        out.flag = false;
        out.witness = k.vertices().labels_of(*best);
    }
    return out;
}

} // namespace macx
