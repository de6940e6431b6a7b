#include "doctest.h"

#include "wreath/eigen.hpp"

using namespace wreath;

namespace {

const Scalar q = Scalar::q();
const Scalar t = Scalar::t();

VarAssignment point(std::vector<std::vector<long>> v) {
    VarAssignment x;
    for (const auto& c : v) {
        std::vector<Scalar> col;
        for (long a : c) col.emplace_back(a);
        x.values.push_back(col);
    }
    return x;
}

Evaluator constant_one() {
    return [](const VarAssignment&) { return Scalar(1); };
}

// Direct transcription of the operator for convention t, written with t in
// place of tau and the i-product exclusion tested by value.
Scalar intro_operator(int p, int n, const SymFunc& f, const VarAssignment& x) {
    const int r = x.r();
    auto md = [r](int a) { return ((a % r) + r) % r; };
    PowerSumForm F(f);
    auto patterns = shift_patterns(x.counts(), p);
    Scalar total;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& tuple) {
        if (static_cast<int>(tuple.size()) < n) {
            for (std::size_t k = 0; k < patterns.size(); ++k) {
                bool clash = false;
                for (int j : tuple) clash |= patterns[j].var(p) == patterns[k].var(p);
                if (clash) continue;
                tuple.push_back(static_cast<int>(k));
                rec(tuple);
                tuple.pop_back();
            }
            return;
        }
        VarAssignment y = x;
        Scalar c(1);
        for (int a = 0; a < n; ++a) {
            const ShiftPattern& J = patterns[tuple[a]];
            auto dn = [&](int i) { return gap_label(J, md(i), Gap::down, y, q); };
            const Scalar xp = y.values[p][J.var(p)];
            c *= (1 - q / t).pow(J.size()) * dn(r - 1) / xp;
            for (int l = 0; l < x.counts()[p]; ++l) {
                bool in_ge = false, in_le = false;
                for (int b = a; b < n; ++b) in_ge |= patterns[tuple[b]].var(p) == l;
                for (int b = 0; b <= a; ++b) in_le |= patterns[tuple[b]].var(p) == l;
                if (!in_ge) c *= t * dn(p - 1) - y.values[p][l];
                if (!in_le) c /= xp - y.values[p][l];
            }
            for (int i = 0; i < r; ++i) {
                if (i == p) continue;
                for (const Scalar& xl : y.values[i]) {
                    if (xl == dn(i)) continue;
                    c *= (t * dn(i - 1) - xl) / (dn(i) - xl);
                }
            }
            VarAssignment ty = apply_T(J, y, ShiftDir::forward, q);
            for (int i = 0; i < r; ++i) {
                if (i == p || !J.has(i)) continue;
                const Scalar& a0 = y.values[i][J.var(i)];
                const Scalar& a1 = ty.values[i][J.var(i)];
                c *= t * a1 / q / (a0 - a1);
            }
            y = ty;
        }
        total += c * F(y);
    };
    std::vector<int> tuple;
    rec(tuple);
    Scalar pref(n * (n - 1) / 2 % 2 == 0 ? 1 : -1);
    for (int k = 1; k <= n; ++k) pref /= 1 - q.pow(k) / t.pow(k);
    return pref * total;
}

}  // namespace

TEST_CASE("gap labels") {
    VarAssignment x = point({{2}, {3}, {5}});
    ShiftPattern J({-1, 0, -1});
    CHECK(gap_label(J, 1, Gap::down, x, q) == Scalar(3));
    CHECK(gap_label(J, 1, Gap::up, x, q) == Scalar(3));
    CHECK(gap_label(J, 0, Gap::down, x, q) == q.pow(2) * 3);
    CHECK(gap_label(J, 2, Gap::down, x, q) == q * 3);
    CHECK(gap_label(J, 0, Gap::up, x, q) == q.inverse() * 3);
    ShiftPattern J2({0, 0, -1});
    CHECK(gap_label(J2, 2, Gap::down, x, q) == q * 3);
    CHECK(gap_label(J2, 2, Gap::up, x, q) == q.inverse() * 2);
}

TEST_CASE("cyclic shifts") {
    VarAssignment x = point({{}, {2, 3}});
    VarAssignment y = apply_T(ShiftPattern({-1, 0}), x, ShiftDir::forward, q);
    CHECK(y.values[1][0] == q.pow(2) * 2);
    CHECK(y.values[1][1] == Scalar(3));

    VarAssignment z = point({{2}, {3}});
    ShiftPattern both({0, 0});
    VarAssignment w = apply_T(both, z, ShiftDir::forward, q);
    CHECK(w.values[1][0] == q * 2);
    CHECK(w.values[0][0] == q * 3);

    std::mt19937_64 rng(21);
    VarAssignment v = random_assignment(rng, {2, 1, 2});
    for (const auto& J : shift_patterns({2, 1, 2})) {
        VarAssignment back = apply_T(J, apply_T(J, v, ShiftDir::forward, q), ShiftDir::inverse, q);
        CHECK(back.values == v.values);
        // T_J(x_J^(i)) = q x_{J down}^(i-1)
        VarAssignment tv = apply_T(J, v, ShiftDir::forward, q);
        VarAssignment iv = apply_T(J, v, ShiftDir::inverse, q);
        for (int i = 0; i < 3; ++i) {
            if (!J.has(i)) continue;
            CHECK(tv.values[i][J.var(i)] == q * gap_label(J, (i + 2) % 3, Gap::down, v, q));
            CHECK(iv.values[i][J.var(i)] == q.inverse() * gap_label(J, (i + 1) % 3, Gap::up, v, q));
        }
        // the product of all variables picks up q^r
        CHECK(tv.product() == q.pow(3) * v.product());
    }
}

TEST_CASE("pattern counts") {
    CHECK(shift_patterns({1, 1}).size() == 3);
    CHECK(shift_patterns({2, 1, 0}).size() == 5);
    CHECK(shift_patterns({2, 1, 0}, 1).size() == 3);
    CHECK(shift_patterns({2, 2, 2}, 0).size() == 18);
}

TEST_CASE("worked examples") {
    std::mt19937_64 rng(22);
    for (int s = 0; s < 3; ++s) {
        VarAssignment x = random_assignment(rng, {2, 1, 0});
        SymFunc P = compute_P({3, 1, 1}, 3, Convention::t);
        CHECK(apply_D(1, 1, P, x, DKind::D, Convention::t) == q);

        VarAssignment y = random_assignment(rng, {1, 1});
        SymFunc P11 = compute_P({1, 1}, 2, Convention::t);
        CHECK(apply_D(0, 1, P11, y, DKind::D, Convention::t) == q * y.values[1][0]);

        VarAssignment z = random_assignment(rng, {0, 2});
        SymFunc P1 = compute_P({1}, 2, Convention::t);
        CHECK(apply_D(1, 2, P1, z, DKind::D, Convention::t) == q * t);
        CHECK(apply_D(1, 1, P1, z, DKind::D, Convention::t) == 1 + q * t);
    }
}

TEST_CASE("degree zero operator is the identity") {
    std::mt19937_64 rng(23);
    VarAssignment x = random_assignment(rng, {1, 1});
    SymFunc P = compute_P({2}, 2, Convention::t);
    CHECK(apply_D(0, 0, P, x, DKind::D, Convention::t) == evaluate(P, x));
}

TEST_CASE("Noumi-Sano example") {
    VarAssignment x = point({{3}, {7}});
    Scalar expected = -(q / t.pow(2)) * (1 - t.pow(2)) / (1 - q.pow(2));
    CHECK(apply_NS1(0, constant_one(), x, NSKind::H, Convention::t_inverse, Params::symbolic()) == expected);
}

TEST_CASE("classical Macdonald operator") {
    std::mt19937_64 rng(24);
    for (int N = 1; N <= 4; ++N) {
        VarAssignment x = random_assignment(rng, {N});
        Scalar e1;
        for (int b = 1; b <= N; ++b) e1 += t.pow(N - b);
        CHECK(classical_macdonald(1, constant_one(), x.values[0], Params::symbolic()) == e1);
    }
    VarAssignment x = random_assignment(rng, {2});
    PowerSumForm P1(compute_P({1}, 1, Convention::t));
    CHECK(classical_macdonald(1, P1, x.values[0], Params::symbolic()) == (q * t + 1) * P1(x));
}

TEST_CASE("r = 1 agrees with the classical operator") {
    std::mt19937_64 rng(25);
    for (int N = 1; N <= 4; ++N) {
        for (int n = 1; n <= std::min(N, 2); ++n) {
            SymFunc f = SymFunc::schur({2, 1}, 0, 1) + Scalar(random_rational(rng)) * SymFunc::p(3, 0, 1) +
                        q * SymFunc::p(1, 0, 1);
            Rational q0 = random_rational(rng), t0 = random_rational(rng);
            SymFunc g = specialize(f, q0, t0);
            PowerSumForm G(g);
            VarAssignment x = random_assignment(rng, {N});
            Params at = Params::at(q0, t0);
            CAPTURE(N);
            CAPTURE(n);
            CHECK(apply_D(0, n, G, x, DKind::D, Convention::t, at) == classical_macdonald(n, G, x.values[0], at));
        }
    }
}

TEST_CASE("formula agrees with a direct transcription") {
    std::mt19937_64 rng(26);
    for (int n = 1; n <= 2; ++n) {
        for (int p = 0; p < 3; ++p) {
            VarAssignment x = random_assignment(rng, {2, 2, 2}, 9);
            SymFunc f = SymFunc::schur(MultiPartition({{1}, {}, {1}})) + t * SymFunc::p(2, p, 3);
            CHECK(apply_D(p, n, f, x, DKind::D, Convention::t) == intro_operator(p, n, f, x));
        }
    }
}

TEST_CASE("eigenfunction equations on a small block") {
    std::mt19937_64 rng(27);
    for (const Partition& lam : enumerate_block({0, 0}, 2)) {
        CAPTURE(lam.to_string());
        SymFunc P = compute_P(lam, 2, Convention::t);
        NVec N{2, 2};
        VarAssignment x = random_assignment(rng, N, 20);
        const Scalar base = evaluate(P, x);
        for (int p = 0; p < 2; ++p) {
            for (int n = 1; n <= 2; ++n) {
                CHECK(apply_D(p, n, P, x, DKind::D, Convention::t) == eigenvalue_D(lam, N, p, n, DKind::D) * base);
            }
            CHECK(apply_D(p, 1, P, x, DKind::Dstar, Convention::t) == eigenvalue_D(lam, N, p, 1, DKind::Dstar) * base);
        }
    }
}

TEST_CASE("t_inverse convention") {
    std::mt19937_64 rng(28);
    for (const Partition& lam : enumerate_block({0, 0}, 1)) {
        SymFunc P = compute_P(lam, 2, Convention::t_inverse);
        VarAssignment x = random_assignment(rng, {1, 1});
        const Scalar base = evaluate(P, x);
        for (int p = 0; p < 2; ++p) {
            CHECK(apply_D(p, 1, P, x, DKind::D, Convention::t_inverse) ==
                  eigenvalue_D(lam, {1, 1}, p, 1, DKind::D, Convention::t_inverse) * base);
            CHECK(apply_NS1(p, P, x, NSKind::H, Convention::t_inverse) ==
                  ns_eigenvalue(lam, {1, 1}, p, NSKind::H, Convention::t_inverse) * base);
        }
    }
}

TEST_CASE("linear combinations of eigenfunctions") {
    std::mt19937_64 rng(29);
    auto lams = enumerate_block({0, 0, 0}, 1);
    const NVec N{1, 1, 1};
    const Rational q0 = random_rational(rng), t0 = random_rational(rng);
    const Params at = Params::at(q0, t0);
    std::vector<SymFunc> Ps;
    std::vector<Rational> cs;
    for (const auto& lam : lams) {
        Ps.push_back(specialize(compute_P(lam, 3, Convention::t), q0, t0));
        cs.push_back(random_rational(rng));
    }
    SymFunc combo(3, Basis::schur);
    for (std::size_t k = 0; k < Ps.size(); ++k) combo = combo + Scalar(cs[k]) * Ps[k];
    for (int p = 0; p < 3; ++p) {
        VarAssignment x = random_assignment(rng, N);
        Scalar expected;
        for (std::size_t k = 0; k < Ps.size(); ++k) {
            expected += Scalar(cs[k]) * Scalar(eigenvalue_D(lams[k], N, p, 1, DKind::D).evaluate(q0, t0)) *
                        evaluate(Ps[k], x);
        }
        CHECK(apply_D(p, 1, combo, x, DKind::D, Convention::t, at) == expected);
    }
}

TEST_CASE("errors") {
    std::mt19937_64 rng(30);
    VarAssignment x = point({{2, 2}, {3, 4}});
    CHECK_THROWS_AS(apply_D(0, 1, constant_one(), x, DKind::D, Convention::t, Params::symbolic()), PoleError);
    VarAssignment y = random_assignment(rng, {1, 1});
    CHECK(apply_D(0, 2, constant_one(), y, DKind::D, Convention::t, Params::symbolic()).is_zero());
    CHECK_THROWS_AS(apply_D(2, 1, constant_one(), y, DKind::D, Convention::t, Params::symbolic()), Error);
    VarAssignment big = random_assignment(rng, {5, 5});
    CHECK_THROWS_AS(apply_D(0, 1, constant_one(), big, DKind::D, Convention::t, Params::symbolic()), Error);
    OperatorLimits off;
    off.override_limits = true;
    CHECK_NOTHROW(apply_D(0, 1, constant_one(), big, DKind::D, Convention::t,
                          Params::at(Rational(1, 3), Rational(2, 7)), off));
}
