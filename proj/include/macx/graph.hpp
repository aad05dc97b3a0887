#pragma once

// Simple graphs on small labelled vertex sets, chordality and induced cycles.

#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "macx/vertex_set.hpp"

namespace macx {

/// Undirected simple graph; adjacency stored as one neighbour mask per vertex position.
class Graph {
public:
    Graph() = default;

    explicit Graph(VertexSet vertices)
        : vertices_(std::move(vertices)), adj_(static_cast<std::size_t>(vertices_.size()), 0) {}

    /// Edges given as label pairs.
    static Graph from_edges(VertexSet vertices, const std::vector<std::pair<int, int>>& edges) {
        Graph g(std::move(vertices));
        for (auto [a, b] : edges) {
            auto pa = g.vertices_.position(a);
            auto pb = g.vertices_.position(b);
            if (!pa || !pb) throw std::out_of_range("edge endpoint is not a vertex");
            g.add_edge(*pa, *pb);
        }
        return g;
    }

    /// Cycle graph on labels 1..p in cyclic order.
    static Graph cycle(int p) {
        Graph g(VertexSet::range(p));
        for (int t = 0; t < p; ++t) g.add_edge(t, (t + 1) % p);
        return g;
    }

    static Graph complete(int n) {
        Graph g(VertexSet::range(n));
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
        return g;
    }

    /// Adds an edge between positions; self-loops are rejected.
    void add_edge(int a, int b) {
        if (a == b) throw std::invalid_argument("self-loop");
        adj_.at(static_cast<std::size_t>(a)) |= bit(b);
        adj_.at(static_cast<std::size_t>(b)) |= bit(a);
    }

    const VertexSet& vertices() const { return vertices_; }
    int num_vertices() const { return vertices_.size(); }
    Mask neighbours(int pos) const { return adj_[static_cast<std::size_t>(pos)]; }
    bool adjacent(int a, int b) const { return (neighbours(a) & bit(b)) != 0; }

    int num_edges() const {
        int e = 0;
        for (Mask n : adj_) e += popcount(n);
        return e / 2;
    }

    /// Edges as position pairs (a < b), ascending.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int a = 0; a < num_vertices(); ++a)
            for (int b : positions(neighbours(a) & ~full_mask(a + 1))) out.emplace_back(a, b);
        return out;
    }

    /// Induced subgraph on `within`, relabelled to the surviving labels.
    Graph induced(Mask within) const {
        Graph g(vertices_.subset(within));
        int t = 0;
        for (int pos : positions(within)) {
            g.adj_[static_cast<std::size_t>(t++)] = compress(neighbours(pos) & within, within);
        }
        return g;
    }

    /// Vertices of `within` adjacent to every other vertex of `within`.
    Mask universal_vertices(Mask within) const {
        Mask out = 0;
        for (int pos : positions(within))
            if ((within & ~bit(pos) & ~neighbours(pos)) == 0) out |= bit(pos);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    VertexSet vertices_;
    std::vector<Mask> adj_;
};

/// Connected components of the subgraph induced on `within`, ordered by smallest vertex.
inline std::vector<Mask> components(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within;
    while (left != 0) {
        Mask comp = bit(lowest_bit(left));
        Mask frontier = comp;
        while (frontier != 0) {
            Mask next = 0;
            for (int pos : positions(frontier)) next |= g.neighbours(pos);
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline std::vector<Mask> components(const Graph& g) { return components(g, g.vertices().all()); }

/// True iff the subgraph induced on `s` is a single cycle (connected, every degree 2, at least 3 vertices).
inline bool induces_cycle(const Graph& g, Mask s) {
    if (popcount(s) < 3) return false;
    for (int pos : positions(s))
        if (popcount(g.neighbours(pos) & s) != 2) return false;
    return components(g, s).size() == 1;
}

/// Every vertex subset inducing a chordless cycle with at least `min_len` vertices, by exhaustive scan.
inline std::vector<Mask> find_induced_cycles(const Graph& g, int min_len = 4) {
    std::vector<Mask> out;
    const Mask all = g.vertices().all();
    for (Mask s = 1; s != 0 && s <= all; ++s) {
        if (popcount(s) >= min_len && induces_cycle(g, s)) out.push_back(s);
        if (s == all) break;
    }
    return out;
}

struct ChordalityResult {
    bool chordal = true;
    /// Perfect elimination ordering (labels) when chordal.
    std::vector<int> elimination_order;
    /// Induced cycle of length >= 4 (labels, in cyclic order) when not chordal.
    std::vector<int> witness_cycle;
};

namespace detail {

// Shortest path from `from` to `to` inside `allowed`, as positions; empty if none.
inline std::vector<int> shortest_path(const Graph& g, int from, int to, Mask allowed) {
    std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()), -1);
    std::deque<int> queue{from};
    Mask seen = bit(from);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (int w : positions(g.neighbours(v) & allowed & ~seen)) {
            seen |= bit(w);
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    if (!(seen & bit(to))) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

// A chordless cycle through some vertex v and two non-adjacent neighbours u, w of v:
// a shortest u-w path avoiding the rest of N[v] closes it up.
inline std::vector<int> find_chordless_cycle(const Graph& g) {
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        Mask nv = g.neighbours(v);
        for (int u : positions(nv)) {
            for (int w : positions(nv & ~full_mask(u + 1))) {
                if (g.adjacent(u, w)) continue;
                Mask allowed = (g.vertices().all() & ~(nv | bit(v))) | bit(u) | bit(w);
                auto path = shortest_path(g, u, w, allowed);
                if (path.empty()) continue;
                path.insert(path.begin(), v);
                return path;
            }
        }
    }
    return {};
}

} // namespace detail

/// Chordality by maximum cardinality search followed by a perfect-elimination check.
inline ChordalityResult is_chordal(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> visit;
    Mask unvisited = g.vertices().all();
    while (unvisited != 0) {
        int best = -1;
        for (int pos : positions(unvisited))
            if (best < 0 || weight[static_cast<std::size_t>(pos)] > weight[static_cast<std::size_t>(best)]) best = pos;
        visit.push_back(best);
        unvisited &= ~bit(best);
        for (int w : positions(g.neighbours(best) & unvisited)) ++weight[static_cast<std::size_t>(w)];
    }

    // The reverse of the visit order is a perfect elimination ordering iff g is chordal.
    std::vector<int> peo(visit.rbegin(), visit.rend());
    bool ok = true;
    Mask later = g.vertices().all();
    for (int v : peo) {
        later &= ~bit(v);
        Mask nb = g.neighbours(v) & later;
        for (int a : positions(nb)) {
            if ((nb & ~bit(a) & ~g.neighbours(a)) != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
    }

    ChordalityResult result;
    result.chordal = ok;
    if (ok) {
        for (int v : peo) result.elimination_order.push_back(g.vertices().label(v));
    } else {
        for (int v : detail::find_chordless_cycle(g)) result.witness_cycle.push_back(g.vertices().label(v));
    }
    return result;
}

} // namespace macx
