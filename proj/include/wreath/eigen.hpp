#pragma once

// Closed-form eigenvalues of the wreath Macdonald operators (elementary
// symmetric functions of spectral variables) and of the degree-1 Noumi-Sano
// operators (graded pieces of f_lambda).

#include <vector>

#include "wreath/operators.hpp"

namespace wreath {

/// e_n of a list; zero when the list is shorter than n.
Scalar elementary(const std::vector<Scalar>& xs, int n);

/// D:     e_n{ q^{lambda_b} t^{|N|-b} : b - lambda_b = p+1 mod r }
/// Dstar: e_n{ q^{-lambda_b} t^{-|N|+b} }
/// Convention t_inverse replaces t by 1/t, matching P_lambda[X; q, 1/t].
Scalar eigenvalue_D(const Partition& lambda, const NVec& N, int p, int n, DKind variant,
                    Convention convention = Convention::t);

/// (1 - q^r) f_lambda as a polynomial; value() restores the denominator.
struct FLambda {
    BiPoly numerator;
    int r = 1;
    Scalar value() const;
};

FLambda f_lambda(const Partition& lambda, int Nsize, int r);

/// The piece of f_lambda whose monomials q^a t^b have a + b = -(p+1) mod r.
/// This is the grading under which H_{p,1} has eigenvalue f^(p); at r = 2 it
/// coincides with a + b = 1 - p, which the r = 2 example also pins down.
Scalar f_component(const Partition& lambda, int Nsize, int r, int p);

/// H: f^(p)(q,t); Hstar: f^(p)(1/q,1/t); t_inverse then replaces t by 1/t.
Scalar ns_eigenvalue(const Partition& lambda, const NVec& N, int p, NSKind kind,
                     Convention convention = Convention::t);

/// Degree-one z-coefficient of the product of truncated Pochhammer symbols
///   prod_i prod_{b - lambda_b = p+i+1} (q^{lambda_b+i} t^{|N|-b+1} w; q^r)
///        / prod_{b - lambda_b = p+i} (q^{lambda_b+i} t^{|N|-b} w; q^r),
/// as a polynomial in (q, t), correct modulo q^q_order.  For Hstar the same
/// polynomial is read in (1/q, 1/t).  It equals q * f^(p) (resp. the inverted
/// form): the product as written carries one extra power of q relative to the
/// operator eigenvalue.
struct SeriesOracle {
    BiPoly series;
    int q_order = 0;
};

SeriesOracle ns_eigen_series_oracle(const Partition& lambda, const NVec& N, int p, NSKind variant,
                                    int truncation = 0);

/// True when the power series of f in q agrees with oracle.series below q_order.
/// f must be regular at q = 0.
bool series_agrees(const Scalar& f, const SeriesOracle& oracle);

}  // namespace wreath
