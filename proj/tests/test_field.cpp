#include "doctest.h"

#include <random>

#include "wreath/field.hpp"

using namespace wreath;

namespace {

const Scalar q = Scalar::q();
const Scalar t = Scalar::t();

BiPoly random_poly(std::mt19937_64& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<BiPoly::Term> terms;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) terms.push_back({deg(rng), deg(rng), Rational(coef(rng), 1 + (rng() % 3))});
    return BiPoly::from_terms(std::move(terms));
}

Scalar random_scalar(std::mt19937_64& rng) {
    BiPoly n = random_poly(rng, 3, 3);
    BiPoly d;
    do d = random_poly(rng, 2, 3);
    while (d.is_zero());
    return Scalar(n, d);
}

}  // namespace

TEST_CASE("bipoly basics") {
    BiPoly a = BiPoly::q() + BiPoly::t();
    BiPoly b = a * a;
    CHECK(b == BiPoly::monomial(2, 0) + BiPoly::monomial(1, 1, 2) + BiPoly::monomial(0, 2));
    CHECK((b - b).is_zero());
    CHECK(b.divexact(a) == a);
    CHECK_THROWS_AS(b.divexact(BiPoly::q() + 1), Error);
    CHECK(b.evaluate(2, 3) == 25);
    CHECK(b.to_string() == "t^2 + 2*q*t + q^2");
}

TEST_CASE("gcd") {
    BiPoly one_minus_q = BiPoly(1) - BiPoly::q();
    BiPoly one_minus_t = BiPoly(1) - BiPoly::t();
    BiPoly x = one_minus_q * one_minus_t * (BiPoly::q() + BiPoly::t().pow(2));
    BiPoly y = one_minus_q * (BiPoly(1) + BiPoly::t()) * BiPoly::q();
    CHECK(gcd(x, y) == BiPoly::q() - 1);
    CHECK(gcd(x, BiPoly(3)) == BiPoly(1));
    CHECK(gcd(BiPoly::monomial(2, 3), BiPoly::monomial(1, 5)) == BiPoly::monomial(1, 3));
    BiPoly z = (BiPoly::q() * BiPoly::t() - 1).pow(3) * (BiPoly::q() - BiPoly::t());
    CHECK(gcd(z, (BiPoly::q() * BiPoly::t() - 1).pow(2) * BiPoly::q()) == (BiPoly::q() * BiPoly::t() - 1).pow(2));
}

TEST_CASE("arithmetic examples") {
    Scalar a = (1 - t * t) / (1 - q);
    Scalar b = t * t / (1 - q);
    CHECK(a + b == Scalar(1) / (1 - q));
    CHECK((1 - q * t) / (1 - q * t) == Scalar(1));
    Scalar c = (1 - t * t) * (1 + q) / ((1 - q * q) * (1 + t));
    CHECK(c == (1 - t) / (1 - q));
    CHECK(arithmetic(a, b, Op::add) == Scalar(1) / (1 - q));
    CHECK_THROWS_AS(a / Scalar(0), DivisionByZero);
    CHECK_THROWS_AS(Scalar(BiPoly(1), BiPoly()), DivisionByZero);
}

TEST_CASE("canonical form") {
    Scalar a = (q - t) / (2 * q * q - 2);
    CHECK(a.den().leading().c == 1);
    CHECK((a - a).is_zero());
    CHECK((a - a) == Scalar(0));
    CHECK(Scalar::monomial(-2, 1, 3) == 3 * t / (q * q));
    CHECK(Scalar::monomial(-2, 1).pow(-1) == q * q / t);
}

TEST_CASE("invert_t") {
    CHECK(invert_t(1 - q * t) == (t - q) / t);
    Scalar f = q * (1 - t * t) / (1 - q * q);
    CHECK(invert_t(f) == -q * (1 - t * t) / (t * t * (1 - q * q)));
    CHECK(invert_t(t) == Scalar(1) / t);
    CHECK((q / t).invert_qt() == t / q);
}

TEST_CASE("evaluate") {
    CHECK((q * t).evaluate(2, 3) == 6);
    CHECK(((1 - t * t) / (1 - q)).evaluate(2, 2) == 3);
    CHECK_THROWS_AS((Scalar(1) / (1 - q)).evaluate(1, 5), PoleError);
}

TEST_CASE("parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Scalar c = random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (i % 4 == 0) {
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
        }
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK((a - a).is_zero());
        CHECK(invert_t(invert_t(a)) == a);
        CHECK(invert_t(a * b) == invert_t(a) * invert_t(b));
        CHECK(invert_t(a + b) == invert_t(a) + invert_t(b));
    }
}

TEST_CASE("evaluate is a homomorphism") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Scalar a = random_scalar(rng);
        Scalar b = random_scalar(rng);
        Rational q0(static_cast<long>(rng() % 50) + 1, static_cast<long>(rng() % 50) + 1);
        Rational t0(static_cast<long>(rng() % 50) + 1, static_cast<long>(rng() % 50) + 1);
        q0.canonicalize();
        t0.canonicalize();
        try {
            Rational ea = a.evaluate(q0, t0);
            Rational eb = b.evaluate(q0, t0);
            CHECK((a + b).evaluate(q0, t0) == ea + eb);
            CHECK((a * b).evaluate(q0, t0) == ea * eb);
            CHECK(invert_t(a).evaluate(q0, t0) == a.evaluate(q0, 1 / t0));
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 200);
}
