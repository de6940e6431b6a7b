#include "doctest.h"

#include <algorithm>

#include "wreath/evalpoly.hpp"
#include "wreath/macdonald.hpp"

using namespace wreath;

namespace {

VarAssignment point(std::vector<std::vector<long>> v) {
    VarAssignment x;
    for (const auto& c : v) {
        std::vector<Scalar> col;
        for (long a : c) col.emplace_back(a);
        x.values.push_back(col);
    }
    return x;
}

}  // namespace

TEST_CASE("evaluate small examples") {
    CHECK(evaluate(SymFunc::schur(MultiPartition({{}, {1}})), point({{5}, {7}})) == Scalar(7));
    CHECK(evaluate(SymFunc::p(2, 0, 1), point({{2, 3}})) == Scalar(13));
    CHECK(evaluate(SymFunc::schur({2, 1}, 0, 1), point({{1, 1, 1}})) == Scalar(8));
    CHECK(evaluate(SymFunc::one(2), point({{3}, {4}})) == Scalar(1));
    // more variables than the degree needs, and fewer
    CHECK(evaluate(SymFunc::schur({1, 1, 1}, 0, 1), point({{1, 2}})) == Scalar(0));
    CHECK(evaluate(SymFunc::schur({1, 1}, 0, 1), point({{1, 2, 3}})) == Scalar(11));
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(11);
    const int r = 2;
    auto mps = multipartitions_of(2, r);
    for (int trial = 0; trial < 20; ++trial) {
        SymFunc f = SymFunc::schur(mps[trial % mps.size()]) + Scalar::q() * SymFunc::p(1, 1, r);
        SymFunc g = SymFunc::schur(mps[(trial + 3) % mps.size()]) - Scalar(random_rational(rng)) * SymFunc::one(r);
        VarAssignment x = random_assignment(rng, {2, 3});
        CHECK(evaluate(multiply(f, g), x) == evaluate(f, x) * evaluate(g, x));
        CHECK(evaluate(f + g, x) == evaluate(f, x) + evaluate(g, x));
    }
}

TEST_CASE("evaluate is symmetric within each color") {
    std::mt19937_64 rng(12);
    SymFunc f = compute_P({2, 1}, 2, Convention::t);
    VarAssignment x = random_assignment(rng, {2, 2});
    Scalar v = evaluate(f, x);
    for (auto& col : x.values) {
        std::reverse(col.begin(), col.end());
        CHECK(evaluate(f, x) == v);
    }
}

TEST_CASE("shifted evaluation") {
    SymFunc f = SymFunc::schur(MultiPartition({{1}, {1}}));
    VarAssignment x = point({{2}, {3}});
    CHECK(shifted_evaluate(f, x, {}) == evaluate(f, x));
    // x1^(1) -> q x1^(0)
    Scalar v = shifted_evaluate(f, x, {{{1, 0}, Scalar::q() * x.values[0][0]}});
    CHECK(v == Scalar(2) * Scalar(2) * Scalar::q());
}

TEST_CASE("adding r columns to the first |N| rows multiplies by all variables") {
    std::mt19937_64 rng(13);
    struct Case {
        int r;
        NVec N;
        Partition lam;
    };
    // all of these stay at quotient degree <= 3 after the shift
    const std::vector<Case> cases = {
        {2, {1, 1}, {}}, {2, {1, 1}, {2}}, {2, {1, 1}, {1, 1}}, {2, {0, 2}, {1}}, {3, {1, 1, 1}, {}}, {3, {2, 1, 0}, {3, 1, 1}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.lam.to_string());
        REQUIRE(is_compatible(c.N, kappa(c.lam, c.r)));
        Partition big_lam = add_rectangle(c.lam, total(c.N), c.r);
        Rational q0 = random_rational(rng), t0 = random_rational(rng);
        VarAssignment x = random_assignment(rng, c.N);
        SymFunc a = specialize(compute_P(big_lam, c.r, Convention::t), q0, t0);
        SymFunc b = specialize(compute_P(c.lam, c.r, Convention::t), q0, t0);
        CHECK(evaluate(a, x) == x.product() * evaluate(b, x));
    }
}
