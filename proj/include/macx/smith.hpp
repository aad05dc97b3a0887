#pragma once

// Smith normal form of integer matrices.
//
// Elimination first runs on checked 64-bit integers and restarts on
// arbitrary-precision integers if any intermediate value overflows.

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace macx {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Matrix product; entries must stay within 64 bits.
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                std::int64_t x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
            }
        return out;
    }

    bool is_zero() const {
        for (auto x : data_)
            if (x != 0) return false;
        return true;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

struct SmithForm {
    /// Nonzero invariant factors d_1 | d_2 | ... (all positive).
    std::vector<BigInt> diagonal;
    std::size_t rank = 0;
};

/// Rewrites a list of positive integers into invariant-factor order (each divides the next)
/// without changing the isomorphism type of the diagonal matrix.
inline void normalize_invariant_factors(std::vector<BigInt>& d) {
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[j] % d[i] == 0) continue;
            BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            BigInt l = d[i] / g * d[j];
            d[i] = g;
            d[j] = l;
        }
}

namespace detail {

struct Overflow {};

inline std::int64_t abs_value(std::int64_t x) {
    if (x == INT64_MIN) throw Overflow{};
    return x < 0 ? -x : x;
}
inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// x -= q * y
inline void sub_mul(std::int64_t& x, std::int64_t q, std::int64_t y) {
    std::int64_t p = 0;
    if (__builtin_mul_overflow(q, y, &p) || __builtin_sub_overflow(x, p, &x)) throw Overflow{};
}
inline void sub_mul(BigInt& x, const BigInt& q, const BigInt& y) { x -= q * y; }

template <class Int>
class Work {
public:
    explicit Work(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) = Int(m(r, c));
    }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }
    void swap_cols(std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, c1), at(r, c2));
    }

    // Diagonalizes in place using smallest-magnitude pivots; returns |pivots|.
    std::vector<Int> diagonalize() {
        std::vector<Int> diag;
        const std::size_t n = std::min(rows_, cols_);
        for (std::size_t t = 0; t < n; ++t) {
            if (!place_min_pivot(t)) break;
            for (;;) {
                bool clean = true;
                const Int p = at(t, t);
                for (std::size_t r = t + 1; r < rows_; ++r) {
                    if (at(r, t) == 0) continue;
                    Int q = at(r, t) / p;
                    if (q != 0)
                        for (std::size_t c = t; c < cols_; ++c)
                            if (at(t, c) != 0) sub_mul(at(r, c), q, at(t, c));
                    if (at(r, t) != 0) clean = false;
                }
                for (std::size_t c = t + 1; c < cols_; ++c) {
                    if (at(t, c) == 0) continue;
                    Int q = at(t, c) / p;
                    if (q != 0)
                        for (std::size_t r = t; r < rows_; ++r)
                            if (at(r, t) != 0) sub_mul(at(r, c), q, at(r, t));
                    if (at(t, c) != 0) clean = false;
                }
                if (clean) break;
                // a remainder smaller than the pivot survived in row or column t
                std::size_t br = t, bc = t;
                Int best = abs_value(at(t, t));
                for (std::size_t r = t + 1; r < rows_; ++r)
                    if (at(r, t) != 0 && abs_value(at(r, t)) < best) {
                        best = abs_value(at(r, t));
                        br = r;
                        bc = t;
                    }
                for (std::size_t c = t + 1; c < cols_; ++c)
                    if (at(t, c) != 0 && abs_value(at(t, c)) < best) {
                        best = abs_value(at(t, c));
                        br = t;
                        bc = c;
                    }
                swap_rows(t, br);
                swap_cols(t, bc);
            }
            diag.push_back(abs_value(at(t, t)));
        }
        return diag;
    }

private:
    bool place_min_pivot(std::size_t t) {
        bool found = false;
        Int best = 0;
        std::size_t br = t, bc = t;
        for (std::size_t r = t; r < rows_; ++r)
            for (std::size_t c = t; c < cols_; ++c) {
                const Int& x = at(r, c);
                if (x == 0) continue;
                Int ax = abs_value(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    br = r;
                    bc = c;
                    if (best == 1) goto done;
                }
            }
    done:
        if (!found) return false;
        swap_rows(t, br);
        swap_cols(t, bc);
        return true;
    }

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

} // namespace detail

/// Invariant factors and rank of m; transformation matrices are not tracked.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm out;
    try {
        detail::Work<std::int64_t> w(m);
        for (auto d : w.diagonalize()) out.diagonal.emplace_back(d);
    } catch (const detail::Overflow&) {
        out.diagonal.clear();
        detail::Work<BigInt> w(m);
        out.diagonal = w.diagonalize();
    }
    out.rank = out.diagonal.size();
    normalize_invariant_factors(out.diagonal);
    return out;
}

} // namespace macx
