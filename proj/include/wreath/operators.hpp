#pragma once

// Shift patterns, cyclic-shift operators T_J and the wreath Macdonald and
// degree-1 Noumi-Sano difference operators, applied by exact evaluation.
//
// Every operator is built from one formula in a symbol tau.  For the (q, t^-1)
// forms tau = t; for the (q, t) forms tau = 1/t.  q and t are Scalars, so the
// same code runs with symbolic q,t or at a rational specialization.

#include <cstdint>
#include <functional>
#include <vector>

#include "wreath/evalpoly.hpp"
#include "wreath/macdonald.hpp"

namespace wreath {

/// At most one variable per color; chosen[i] == -1 means color i is absent.
class ShiftPattern {
public:
    explicit ShiftPattern(int r) : chosen_(r, -1) {}
    explicit ShiftPattern(std::vector<int> chosen);

    int r() const { return static_cast<int>(chosen_.size()); }
    bool has(int color) const { return chosen_[mod_color(color)] >= 0; }
    int var(int color) const { return chosen_[mod_color(color)]; }
    void set(int color, int index) { chosen_[mod_color(color)] = index; }
    int size() const;
    bool empty() const { return size() == 0; }
    const std::vector<int>& chosen() const { return chosen_; }
    bool operator==(const ShiftPattern&) const = default;

private:
    int mod_color(int i) const;
    std::vector<int> chosen_;
};

enum class Gap { up, down };
enum class ShiftDir { forward, inverse };

struct Params {
    Scalar q;
    Scalar t;
    static Params symbolic() { return {Scalar::q(), Scalar::t()}; }
    static Params at(const Rational& q0, const Rational& t0) { return {Scalar(q0), Scalar(t0)}; }
};

using Evaluator = std::function<Scalar(const VarAssignment&)>;

/// x^(i)_{J down} = q^(i - i_down) x_J^(i_down) with 0 <= i - i_down <= r-1 (down),
/// x^(i)_{J up}   = q^(i - i_up)   x_J^(i_up)   with 0 <= i_up - i <= r-1 (up).
Scalar gap_label(const ShiftPattern& J, int i, Gap dir, const VarAssignment& x, const Scalar& q);

/// forward: x_J^(i) -> q^d x_J^(i-d) with d in 1..r minimal such that color i-d is in J.
/// inverse: x_J^(i) -> q^-d x_J^(i+d).
VarAssignment apply_T(const ShiftPattern& J, const VarAssignment& x, ShiftDir dir, const Scalar& q);

/// All nonempty shift patterns for the counts N, optionally only those containing `color`.
std::vector<ShiftPattern> shift_patterns(const NVec& N, int color = -1);

enum class DKind { D, Dstar };
enum class NSKind { H, Hstar };

struct OperatorLimits {
    int max_n = 3;
    int max_vars_per_color = 4;
    bool override_limits = false;
};

Scalar apply_D(int p, int n, const Evaluator& f, const VarAssignment& x, DKind kind,
               Convention convention, const Params& params, const OperatorLimits& limits = {});
Scalar apply_D(int p, int n, const SymFunc& f, const VarAssignment& x, DKind kind,
               Convention convention, const Params& params = Params::symbolic());

/// Degree-1 Noumi-Sano operator H_{p,1} or H*_{p,1}.
Scalar apply_NS1(int p, const Evaluator& f, const VarAssignment& x, NSKind kind,
                 Convention convention, const Params& params, const OperatorLimits& limits = {});
Scalar apply_NS1(int p, const SymFunc& f, const VarAssignment& x, NSKind kind,
                 Convention convention, const Params& params = Params::symbolic());

/// t^{n(n-1)/2} sum_{|I|=n} prod_{i in I, j not in I} (t x_i - x_j)/(x_i - x_j) * prod_{i in I} T_{q,x_i}.
Scalar classical_macdonald(int n, const Evaluator& f, const std::vector<Scalar>& x, const Params& params);

}  // namespace wreath
