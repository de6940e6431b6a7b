#pragma once

// Exact arithmetic in K = Q(q,t).
//
// BiPoly is a sparse polynomial in q and t with rational coefficients, kept
// sorted (graded lexicographic, descending) with no stored zeros, so two
// BiPolys are equal iff their term vectors are equal.  Scalar is a reduced
// quotient of BiPolys with a monic denominator; every constructor and every
// arithmetic operation reduces, so equality is structural as well.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wreath {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in Q(q,t)") {}
};

/// Denominator vanished at an evaluation point.
class PoleError : public Error {
public:
    using Error::Error;
    PoleError() : Error("pole at evaluation point") {}
};

class BiPoly {
public:
    struct Term {
        int q = 0;
        int t = 0;
        Rational c;
        bool operator==(const Term&) const = default;
    };

    BiPoly() = default;
    BiPoly(long c);                  // NOLINT(google-explicit-constructor)
    BiPoly(const Rational& c);       // NOLINT(google-explicit-constructor)
    static BiPoly monomial(int q_exp, int t_exp, const Rational& c = 1);
    static BiPoly q();
    static BiPoly t();
    /// Sorts, merges duplicate exponents, drops zeros.
    static BiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading() const { return terms_.front(); }
    Rational constant_term() const;

    int degree_q() const;
    int degree_t() const;
    int min_degree_q() const;
    int min_degree_t() const;
    int total_degree() const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }

    bool operator==(const BiPoly&) const = default;

    /// q^dq t^dt * this; exponents must stay nonnegative.
    BiPoly shifted(int dq, int dt) const;
    /// Replaces t by 1/t and multiplies by t^deg_t so the result is a polynomial.
    BiPoly reversed_t(int deg_t) const;
    BiPoly pow(unsigned n) const;

    /// Exact division; throws Error when `d` does not divide *this.
    BiPoly divexact(const BiPoly& d) const;

    Rational evaluate(const Rational& q0, const Rational& t0) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Greatest common divisor, normalized monic in graded-lex order (1 for units).
BiPoly gcd(const BiPoly& a, const BiPoly& b);

class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}                // NOLINT
    Scalar(const Rational& c) : num_(c), den_(1) {}     // NOLINT
    Scalar(const BiPoly& p) : num_(p), den_(1) {}       // NOLINT
    /// Reduces num/den; throws DivisionByZero when den == 0.
    Scalar(BiPoly num, BiPoly den);

    static Scalar q() { return Scalar(BiPoly::q()); }
    static Scalar t() { return Scalar(BiPoly::t()); }
    /// q^a t^b with arbitrary integer exponents.
    static Scalar monomial(int a, int b, const Rational& c = 1);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar&) const = default;

    Scalar inverse() const;
    Scalar pow(int n) const;

    /// The field automorphism t -> 1/t fixing q.
    Scalar invert_t() const;
    /// The field automorphism q -> 1/q, t -> 1/t.
    Scalar invert_qt() const;

    /// Exact value at (q0, t0); throws PoleError when the denominator vanishes.
    Rational evaluate(const Rational& q0, const Rational& t0) const;

    std::string to_string() const;

private:
    void reduce();

    BiPoly num_;
    BiPoly den_;
};

Scalar invert_t(const Scalar& a);

enum class Op { add, sub, mul, div };
Scalar arithmetic(const Scalar& a, const Scalar& b, Op op);

std::ostream& operator<<(std::ostream& os, const BiPoly& p);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p/q" or an integer.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace wreath
