#pragma once

// Minimal multiplicative generating sets of nested commutators.
//
// Each subset J with j = max J contributes one word per connected component C
// of K_J that misses j: i = min C, prefix = J \ {i, j} ascending. The group
// kind renders (g_k1,(...,(g_j,g_i)...)), the algebra kind [u_k1,[...,[u_j,u_i]...]].

#include <string>
#include <vector>

#include "macx/simplicial_complex.hpp"

namespace macx {

enum class CommutatorKind { Group, Algebra };

struct CommutatorWord {
    CommutatorKind kind = CommutatorKind::Group;
    /// k_1 < ... < k_{l-2}, as vertex labels
    std::vector<int> prefix;
    int j = 0;
    int i = 0;

    friend bool operator==(const CommutatorWord&, const CommutatorWord&) = default;
};

inline std::string render_word(const CommutatorWord& w) {
    const bool group = w.kind == CommutatorKind::Group;
    const char open = group ? '(' : '[';
    const char close = group ? ')' : ']';
    const std::string sym = group ? "g_" : "u_";
    std::string s;
    for (int k : w.prefix) s += open + sym + std::to_string(k) + ',';
    s += open + sym + std::to_string(w.j) + ',' + sym + std::to_string(w.i) + close;
    s.append(w.prefix.size(), close);
    return s;
}

struct GeneratorSet {
    std::vector<CommutatorWord> words;
    std::size_t count() const { return words.size(); }
};

/// Sum over J of rank H~_0(K_J): components of K_J minus one, floored at zero.
inline std::size_t generator_count(const SimplicialComplex& k) {
    const Graph g = one_skeleton(k);
    const Mask all = k.vertices().all();
    std::size_t total = 0;
    for (Mask j = 1; j != 0 && j <= all; ++j) {
        if (popcount(j) >= 2) total += components(g, j).size() - 1;
        if (j == all) break;
    }
    return total;
}

/// Words in canonical order: J ascending as a bitmask, then i ascending.
inline GeneratorSet enumerate_generators(const SimplicialComplex& k, CommutatorKind kind) {
    const Graph g = one_skeleton(k);
    const VertexSet& vs = k.vertices();
    const Mask all = vs.all();
    GeneratorSet out;
    for (Mask j = 1; j != 0 && j <= all; ++j) {
        if (popcount(j) >= 2) {
            const int top = highest_bit(j);
            for (Mask comp : components(g, j)) {
                if (comp & bit(top)) continue;
                const int low = lowest_bit(comp);
                CommutatorWord w;
                w.kind = kind;
                w.prefix = vs.labels_of(j & ~bit(top) & ~bit(low));
                w.j = vs.label(top);
                w.i = vs.label(low);
                out.words.push_back(std::move(w));
            }
        }
        if (j == all) break;
    }
    return out;
}

/// Checks the side conditions on a word directly against K:
/// k_1 < ... < k_{l-2} < j > i, k_s != i, and i is the smallest vertex of a
/// component of K_{k_1..k_{l-2}, j, i} that does not contain j.
inline bool satisfies_generator_conditions(const SimplicialComplex& k, const CommutatorWord& w) {
    const VertexSet& vs = k.vertices();
    if (!vs.contains(w.i) || !vs.contains(w.j) || w.i >= w.j) return false;
    for (std::size_t t = 0; t < w.prefix.size(); ++t) {
        if (!vs.contains(w.prefix[t]) || w.prefix[t] == w.i || w.prefix[t] >= w.j) return false;
        if (t > 0 && w.prefix[t - 1] >= w.prefix[t]) return false;
    }
    std::vector<int> support = w.prefix;
    support.push_back(w.j);
    support.push_back(w.i);
    const SimplicialComplex sub = full_subcomplex(k, support);
    const Graph g = one_skeleton(sub);
    const int pi = *sub.vertices().position(w.i);
    const int pj = *sub.vertices().position(w.j);
    for (Mask comp : components(g)) {
        if (!(comp & bit(pi))) continue;
        return !(comp & bit(pj)) && lowest_bit(comp) == pi;
    }
    return false;
}

} // namespace macx
