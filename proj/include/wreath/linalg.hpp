#pragma once

// Small dense exact linear algebra over Q (Rational) and K = Q(q,t) (Scalar).

#include <utility>
#include <vector>

#include "wreath/field.hpp"

namespace wreath {

template <class F>
using Matrix = std::vector<std::vector<F>>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (!is_zero(m[i][col])) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        const F inv = F(1) / m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || is_zero(m[i][col])) continue;
            const F f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (!is_zero(m[row][j])) m[i][j] -= f * m[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, std::size_t cols) {
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols, F(0));
        v[f] = F(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solves m x = b for square nonsingular m; throws Error otherwise.
template <class F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
    const std::size_t n = m.size();
    Matrix<F> aug = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw Error("solve: matrix is not square");
        aug[i].push_back(b[i]);
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) throw Error("solve: singular system");
    std::vector<F> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
    return x;
}

/// Nullspace over K by fraction-free (Bareiss) elimination on cleared
/// polynomial rows; only the final back substitution divides.
std::vector<std::vector<Scalar>> nullspace_fraction_free(const Matrix<Scalar>& m, std::size_t cols);

}  // namespace wreath
