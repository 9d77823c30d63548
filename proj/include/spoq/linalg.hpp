#pragma once

#include <optional>
#include <vector>

#include "spoq/graded_op.hpp"
#include "spoq/rational.hpp"

namespace spoq {

/// Dense matrix over an exact field scalar (Rational or RationalFunc).
template <class F>
struct DenseMat {
    std::size_t rows = 0, cols = 0;
    std::vector<F> a;

    DenseMat() = default;
    DenseMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    F& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const F& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <class F>
bool fzero(const F& x) {
    return x == F();
}
inline bool fzero(const Rational& x) { return x == 0; }
inline bool fzero(const RationalFunc& x) { return x.is_zero(); }

/// Row-reduces in place; returns the rank.
template <class F>
std::size_t row_reduce(DenseMat<F>& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t piv = rank;
        while (piv < m.rows && fzero(m.at(piv, col))) ++piv;
        if (piv == m.rows) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
        F pivot = m.at(rank, col);
        for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) / pivot;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == rank || fzero(m.at(r, col))) continue;
            F f = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

/// Inverse of a square matrix; empty optional when singular.
template <class F>
std::optional<DenseMat<F>> invert(const DenseMat<F>& m) {
    const std::size_t n = m.rows;
    DenseMat<F> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = F(1);
    }
    if (row_reduce(aug) != n) return std::nullopt;
    DenseMat<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

template <class F>
std::size_t nullity(DenseMat<F> m) {
    std::size_t rank = row_reduce(m);
    return m.cols - rank;
}

/// Incremental echelon basis over the rationals, used for orbit spans.
class RatSpan {
public:
    explicit RatSpan(std::size_t ambient) : ambient_(ambient) {}
    /// Reduces v against the basis; true when it enlarged the span.
    bool insert(std::vector<Rational> v);
    bool contains(std::vector<Rational> v) const;
    std::size_t dim() const { return rows_.size(); }

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_; // echelon rows
    std::vector<std::size_t> pivots_;
    void reduce(std::vector<Rational>& v) const;
};

/// Operator entries evaluated at a rational q, as a dense matrix.
DenseMat<Rational> specialize(const GradedOperator& f, const Rational& q0);
/// Tensor coefficients at a rational q, as a dense column.
std::vector<Rational> specialize(const TensorVector& x, const Rational& q0);

} // namespace spoq
