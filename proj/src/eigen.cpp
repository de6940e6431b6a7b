#include "wreath/eigen.hpp"

#include <algorithm>

namespace wreath {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

BiPoly one_minus_q_pow(int r) { return BiPoly(1) - BiPoly::monomial(r, 0); }

}  // namespace

Scalar elementary(const std::vector<Scalar>& xs, int n) {
    if (n < 0) return Scalar();
    std::vector<Scalar> e(n + 1);
    e[0] = Scalar(1);
    for (const auto& x : xs) {
        for (int k = n; k >= 1; --k) e[k] += e[k - 1] * x;
    }
    return e[n];
}

Scalar eigenvalue_D(const Partition& lambda, const NVec& N, int p, int n, DKind variant, Convention convention) {
    std::vector<Scalar> xs;
    for (auto [a, b] : spectral_vars(lambda, N, p)) {
        if (convention == Convention::t_inverse) b = -b;
        xs.push_back(variant == DKind::D ? Scalar::monomial(a, b) : Scalar::monomial(-a, -b));
    }
    return elementary(xs, n);
}

Scalar FLambda::value() const { return Scalar(numerator, one_minus_q_pow(r)); }

FLambda f_lambda(const Partition& lambda, int Nsize, int r) {
    if (r < 1) throw Error("f_lambda: r must be positive");
    if (lambda.length() > Nsize) throw Error("f_lambda: partition longer than |N|");
    const Partition conj = lambda.transpose();
    const int l1 = lambda.empty() ? 0 : lambda.part(1);
    // f = (1 - q^{l1} t^N)/(1-q) - sum_{j=1}^{l1} q^{j-1} t^{N - lambda'_j}
    BiPoly geom;
    for (int c = 0; c < r; ++c) geom += BiPoly::monomial(c, 0);
    BiPoly num = (BiPoly(1) - BiPoly::monomial(l1, Nsize)) * geom;
    BiPoly finite;
    for (int j = 1; j <= l1; ++j) finite += BiPoly::monomial(j - 1, Nsize - conj.part(j));
    num -= one_minus_q_pow(r) * finite;
    return {num, r};
}

Scalar f_component(const Partition& lambda, int Nsize, int r, int p) {
    const FLambda f = f_lambda(lambda, Nsize, r);
    std::vector<BiPoly::Term> kept;
    for (const auto& term : f.numerator.terms()) {
        if (mod(term.q + term.t, r) == mod(-(p + 1), r)) kept.push_back(term);
    }
    return Scalar(BiPoly::from_terms(std::move(kept)), one_minus_q_pow(r));
}

Scalar ns_eigenvalue(const Partition& lambda, const NVec& N, int p, NSKind kind, Convention convention) {
    const int r = static_cast<int>(N.size());
    if (!is_compatible(N, kappa(lambda, r))) throw Error("ns_eigenvalue: N is not compatible with kappa(lambda)");
    Scalar f = f_component(lambda, total(N), r, p);
    if (kind == NSKind::Hstar) f = f.invert_qt();
    if (convention == Convention::t_inverse) f = f.invert_t();
    return f;
}

SeriesOracle ns_eigen_series_oracle(const Partition& lambda, const NVec& N, int p, NSKind, int truncation) {
    const int r = static_cast<int>(N.size());
    const int n = total(N);
    if (lambda.length() > n) throw Error("ns_eigen_series_oracle: partition longer than |N|");
    const int factors = truncation > 0 ? truncation : 2 * r * (n + lambda.size() + 2);
    const int order = r * factors;

    auto truncate = [&](const BiPoly& a) {
        std::vector<BiPoly::Term> kept;
        for (const auto& term : a.terms()) {
            if (term.q < order) kept.push_back(term);
        }
        return BiPoly::from_terms(std::move(kept));
    };

    // Series in w = 1/z kept to first order: c0 + c1 w.
    BiPoly c0(1), c1;
    auto times_linear = [&](const BiPoly& a1) {  // multiply by 1 + a1 w (mod w^2)
        c1 = truncate(c1 + c0 * a1);
    };
    for (int i = 1; i <= r; ++i) {
        for (int b = 1; b <= n; ++b) {
            const int lb = lambda.part(b);
            const bool numerator = mod(b - lb, r) == mod(p + i + 1, r);
            const bool denominator = mod(b - lb, r) == mod(p + i, r);
            if (!numerator && !denominator) continue;
            const BiPoly base = numerator ? BiPoly::monomial(lb + i, n - b + 1) : BiPoly::monomial(lb + i, n - b);
            for (int m = 0; m < factors; ++m) {
                if (lb + i + r * m >= order) break;
                const BiPoly a = base.shifted(r * m, 0);
                // (1 - a w) upstairs; 1/(1 - a w) = 1 + a w + ... downstairs
                times_linear(numerator ? -a : a);
            }
        }
    }
    return {c1, order};
}

bool series_agrees(const Scalar& f, const SeriesOracle& oracle) {
    BiPoly diff = f.den() * oracle.series - f.num();
    for (const auto& term : diff.terms()) {
        if (term.q < oracle.q_order - f.den().degree_q()) return false;
    }
    return true;
}

}  // namespace wreath
