#include "wreath/evalpoly.hpp"

#include <algorithm>
#include <set>

namespace wreath {

NVec VarAssignment::counts() const {
    NVec n;
    for (const auto& v : values) n.push_back(static_cast<int>(v.size()));
    return n;
}

Scalar VarAssignment::product() const {
    Scalar s(1);
    for (const auto& v : values) {
        for (const auto& x : v) s *= x;
    }
    return s;
}

PowerSumForm::PowerSumForm(const SymFunc& f) : r_(f.r()) {
    SymFunc p = convert(f, Basis::powersum);
    terms_ = p.terms();
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < m.r(); ++i) {
            if (!m[i].empty()) max_k_ = std::max(max_k_, m[i].part(1));
        }
        if (!c.den().is_constant()) {
            const BiPoly g = gcd(common_den_, c.den());
            common_den_ *= c.den().divexact(g);
        }
    }
    for (const auto& [m, c] : terms_) {
        // c.den() is monic, so a constant denominator is 1
        numerators_.emplace_back(m, c.num() * common_den_.divexact(c.den()));
    }
}

Scalar PowerSumForm::operator()(const VarAssignment& x) const {
    if (x.r() != r_) throw Error("evaluate: assignment has the wrong number of colors");
    // ps[i][k] = p_k[X^(i)] at x
    std::vector<std::vector<Scalar>> ps(r_, std::vector<Scalar>(max_k_ + 1));
    for (int i = 0; i < r_; ++i) {
        std::vector<Scalar> pw(x.values[i].begin(), x.values[i].end());
        for (int k = 1; k <= max_k_; ++k) {
            Scalar s;
            for (std::size_t l = 0; l < pw.size(); ++l) {
                s += pw[l];
                pw[l] *= x.values[i][l];
            }
            ps[i][k] = s;
        }
    }
    bool polynomial = true;
    for (const auto& row : ps)
        for (const auto& v : row) polynomial = polynomial && v.is_polynomial();
    if (polynomial) {
        BiPoly total;
        for (const auto& [m, c] : numerators_) {
            BiPoly term = c;
            for (int i = 0; i < r_ && !term.is_zero(); ++i) {
                for (int k : m[i].parts()) term = term * ps[i][k].num();
            }
            total += term;
        }
        return Scalar(total, common_den_);
    }
    Scalar total;
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (int i = 0; i < r_ && !term.is_zero(); ++i) {
            for (int k : m[i].parts()) term *= ps[i][k];
        }
        total += term;
    }
    return total;
}

Scalar evaluate(const SymFunc& f, const VarAssignment& x) { return PowerSumForm(f)(x); }

Scalar shifted_evaluate(const SymFunc& f, const VarAssignment& x,
                        const std::map<std::pair<int, int>, Scalar>& shift) {
    VarAssignment y = x;
    for (const auto& [v, val] : shift) y.values.at(v.first).at(v.second) = val;
    return evaluate(f, y);
}

SymFunc specialize(const SymFunc& f, const Rational& q0, const Rational& t0) {
    return f.map_coeffs([&](const Scalar& c) { return Scalar(c.evaluate(q0, t0)); });
}

Rational random_rational(std::mt19937_64& rng, int height) {
    std::uniform_int_distribution<int> num(-height, height);
    std::uniform_int_distribution<int> den(1, height);
    while (true) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        if (v != 0) return v;
    }
}

VarAssignment random_assignment(std::mt19937_64& rng, const NVec& N, int height) {
    VarAssignment x;
    for (int n : N) {
        std::set<Rational> used;
        std::vector<Scalar> v;
        while (static_cast<int>(v.size()) < n) {
            Rational c = random_rational(rng, height);
            if (used.insert(c).second) v.emplace_back(c);
        }
        x.values.push_back(std::move(v));
    }
    return x;
}

}  // namespace wreath
