#pragma once

// Finitization to colored variables and exact evaluation at points whose
// coordinates live in Q(q,t).

#include <functional>
#include <map>
#include <random>
#include <vector>

#include "wreath/quotients.hpp"
#include "wreath/symfunc.hpp"

namespace wreath {

/// values[i][l] is the value of x^(i)_{l+1}.
struct VarAssignment {
    std::vector<std::vector<Scalar>> values;

    int r() const { return static_cast<int>(values.size()); }
    NVec counts() const;
    /// Product of every coordinate.
    Scalar product() const;
};

/// A symmetric function pre-converted to power sums for repeated evaluation.
class PowerSumForm {
public:
    explicit PowerSumForm(const SymFunc& f);
    Scalar operator()(const VarAssignment& x) const;
    int r() const { return r_; }

private:
    int r_;
    int max_k_ = 0;
    SymFunc::Terms terms_;
    // terms_ over the common denominator, for points with polynomial
    // coordinates: one reduction per evaluation instead of one per term
    BiPoly common_den_{1};
    std::vector<std::pair<MultiPartition, BiPoly>> numerators_;
};

Scalar evaluate(const SymFunc& f, const VarAssignment& x);

/// Replaces the listed coordinates (color, 0-based index) before evaluating.
Scalar shifted_evaluate(const SymFunc& f, const VarAssignment& x,
                        const std::map<std::pair<int, int>, Scalar>& shift);

/// Specializes every coefficient at (q0, t0).
SymFunc specialize(const SymFunc& f, const Rational& q0, const Rational& t0);

/// Random nonzero rational of height at most `height`.
Rational random_rational(std::mt19937_64& rng, int height = 50);

/// Random point with pairwise distinct same-color coordinates.
VarAssignment random_assignment(std::mt19937_64& rng, const NVec& N, int height = 50);

}  // namespace wreath
