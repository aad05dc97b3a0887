#pragma once

// Vertex labels and bitmask subsets of a vertex set.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace macx {

/// Subset of vertex positions; bit t stands for the t-th vertex of a VertexSet.
using Mask = std::uint32_t;

inline constexpr int kMaxVertices = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline int highest_bit(Mask m) { return 31 - std::countl_zero(m); }

inline constexpr Mask bit(int pos) { return Mask{1} << pos; }

inline constexpr Mask full_mask(int m) { return m >= 32 ? ~Mask{0} : (Mask{1} << m) - 1; }

/// Packs the bits of `m` selected by `within` into the low bits, preserving order.
inline Mask compress(Mask m, Mask within) {
    Mask out = 0;
    int t = 0;
    for (Mask rest = within; rest != 0; rest &= rest - 1, ++t) {
        if (m & (rest & -rest)) out |= bit(t);
    }
    return out;
}

/// Inverse of compress: spreads the low bits of `m` onto the set bits of `within`.
inline Mask expand(Mask m, Mask within) {
    Mask out = 0;
    int t = 0;
    for (Mask rest = within; rest != 0; rest &= rest - 1, ++t) {
        if (m & bit(t)) out |= (rest & -rest);
    }
    return out;
}

/// Positions of the set bits, ascending.
inline std::vector<int> positions(Mask m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(lowest_bit(m));
    return out;
}

/// Ordered set of distinct vertex labels (small nonnegative integers), at most 24 of them.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<int> labels) : labels_(std::move(labels)) {
        std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw std::invalid_argument("duplicate vertex label");
        if (!labels_.empty() && labels_.front() < 0)
            throw std::invalid_argument("vertex labels must be nonnegative");
        if (static_cast<int>(labels_.size()) > kMaxVertices)
            throw std::invalid_argument("at most " + std::to_string(kMaxVertices) + " vertices supported");
    }

    /// Labels first, first+1, ..., first+m-1.
    static VertexSet range(int m, int first = 1) {
        if (m < 0) throw std::invalid_argument("negative vertex count");
        std::vector<int> labels(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) labels[static_cast<std::size_t>(t)] = first + t;
        return VertexSet(std::move(labels));
    }

    int size() const { return static_cast<int>(labels_.size()); }
    bool empty() const { return labels_.empty(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int pos) const { return labels_.at(static_cast<std::size_t>(pos)); }
    Mask all() const { return full_mask(size()); }

    std::optional<int> position(int label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<int>(it - labels_.begin());
    }

    bool contains(int label) const { return position(label).has_value(); }

    /// Mask of a list of labels; throws on unknown or repeated labels.
    Mask mask_of(const std::vector<int>& labels) const {
        Mask m = 0;
        for (int l : labels) {
            auto pos = position(l);
            if (!pos) throw std::out_of_range("vertex " + std::to_string(l) + " is not in the vertex set");
            if (m & bit(*pos)) throw std::invalid_argument("duplicate vertex " + std::to_string(l));
            m |= bit(*pos);
        }
        return m;
    }

    std::vector<int> labels_of(Mask m) const {
        std::vector<int> out;
        for (int pos : positions(m)) out.push_back(label(pos));
        return out;
    }

    VertexSet subset(Mask m) const { return VertexSet(labels_of(m)); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> labels_;
};

} // namespace macx
