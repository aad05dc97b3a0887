#pragma once

// Recognition of the complexes C_p and C_p * Delta^q (p >= 4, q >= 0).

#include <optional>
#include <string>
#include <vector>

#include "macx/simplicial_complex.hpp"

namespace macx {

enum class StarMismatch {
    NotFlag,
    RemainderNotCycle,
    CycleTooShort,
    ConeNotUniversal,
};

inline std::string to_string(StarMismatch r) {
    switch (r) {
    case StarMismatch::NotFlag: return "not flag";
    case StarMismatch::RemainderNotCycle: return "remainder not a cycle";
    case StarMismatch::CycleTooShort: return "cycle shorter than 4";
    case StarMismatch::ConeNotUniversal: return "cone vertices not universal";
    }
    return "unknown";
}

struct StarClassification {
    bool matches = false;
    /// Cycle length when matching.
    int p = 0;
    /// Labels of the Delta^q factor; empty means K = C_p.
    std::vector<int> cone_vertices;
    /// Labels of the cycle in cyclic order when matching.
    std::vector<int> cycle;
    std::optional<StarMismatch> reason;

    /// q = |cone| - 1; -1 for a bare cycle.
    int q() const { return static_cast<int>(cone_vertices.size()) - 1; }
};

/// Decides whether K is C_p or C_p * Delta^q by peeling off the universal vertices at once.
inline StarClassification classify_star_condition(const SimplicialComplex& k) {
    StarClassification out;
    if (!is_flag(k).flag) {
        out.reason = StarMismatch::NotFlag;
        return out;
    }
    const Graph g = one_skeleton(k);
    const Mask all = k.vertices().all();
    const Mask cone = g.universal_vertices(all);
    const Mask rest = all & ~cone;

    if (rest == 0 || !induces_cycle(g, rest)) {
        out.reason = StarMismatch::RemainderNotCycle;
        return out;
    }
    if (popcount(rest) < 4) {
        out.reason = StarMismatch::CycleTooShort;
        return out;
    }
    // K must equal K_rest * (simplex on cone) face for face.
    if (!k.contains(cone)) {
        out.reason = StarMismatch::ConeNotUniversal;
        return out;
    }
    for (Mask f : k.faces()) {
        if (!k.contains((f & rest) | cone)) {
            out.reason = StarMismatch::ConeNotUniversal;
            return out;
        }
    }

    out.matches = true;
    out.p = popcount(rest);
    out.cone_vertices = k.vertices().labels_of(cone);
    // walk the cycle from its smallest vertex towards the smaller neighbour
    int start = lowest_bit(rest);
    int prev = start;
    int cur = lowest_bit(g.neighbours(start) & rest);
    out.cycle.push_back(k.vertices().label(start));
    while (cur != start) {
        out.cycle.push_back(k.vertices().label(cur));
        Mask next = g.neighbours(cur) & rest & ~bit(prev);
        prev = cur;
        cur = lowest_bit(next);
    }
    return out;
}

} // namespace macx
