#include "wreath/linalg.hpp"

namespace wreath {

namespace {

BiPoly lcm(const BiPoly& a, const BiPoly& b) {
    if (a.is_constant()) return b;
    if (b.is_constant()) return a;
    return (a * b).divexact(gcd(a, b));
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace_fraction_free(const Matrix<Scalar>& m, std::size_t cols) {
    Matrix<BiPoly> a;
    for (const auto& row : m) {
        BiPoly l(1);
        for (const auto& x : row) l = lcm(l, x.den());
        std::vector<BiPoly> pr;
        bool nonzero = false;
        for (const auto& x : row) {
            pr.push_back(x.num() * l.divexact(x.den()));
            nonzero = nonzero || !x.is_zero();
        }
        if (nonzero) a.push_back(std::move(pr));
    }
    const std::size_t rows = a.size();
    std::vector<std::size_t> pivots;
    BiPoly prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = row; i < rows; ++i) {
            if (a[i][col].is_zero()) continue;
            if (piv == rows || a[i][col].terms().size() < a[piv][col].terms().size()) piv = i;
        }
        if (piv == rows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t i = row + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                BiPoly v = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                a[i][j] = v.divexact(prev);
            }
            a[i][col] = BiPoly();
        }
        prev = a[row][col];
        pivots.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(cols, Scalar(0));
        x[f] = Scalar(1);
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t pc = pivots[k];
            Scalar s;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (!a[k][j].is_zero() && !x[j].is_zero()) s += Scalar(a[k][j]) * x[j];
            }
            x[pc] = -s / Scalar(a[k][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace wreath
