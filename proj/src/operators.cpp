#include "wreath/operators.hpp"

#include <algorithm>

namespace wreath {

namespace {

int mod(int a, int r) { return ((a % r) + r) % r; }

Scalar divide(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw PoleError();
    return a / b;
}

Scalar q_pow(const Scalar& q, int d) { return d >= 0 ? q.pow(d) : q.inverse().pow(-d); }

const Scalar& value(const VarAssignment& x, const ShiftPattern& J, int color) {
    return x.values[color][J.var(color)];
}

void check_limits(const NVec& N, int n, const OperatorLimits& limits) {
    if (limits.override_limits) return;
    if (n > limits.max_n) throw Error("operator degree exceeds the soft limit (override to force)");
    for (int c : N) {
        if (c > limits.max_vars_per_color) throw Error("too many variables per color for the soft limit (override to force)");
    }
}

void check_distinct(const VarAssignment& x) {
    for (const auto& v : x.values) {
        for (std::size_t a = 0; a < v.size(); ++a) {
            for (std::size_t b = a + 1; b < v.size(); ++b) {
                if (v[a] == v[b]) throw PoleError("coincident same-color coordinates");
            }
        }
    }
}

Scalar tau_of(const Params& params, Convention convention) {
    return convention == Convention::t_inverse ? params.t : params.t.inverse();
}

// Bracketed coefficient of D_{p,n} for one pattern.  ge / le flag the p-colored
// variable names occurring in J_a..J_n and J_1..J_a respectively.
Scalar coefficient_D(int p, const ShiftPattern& J, const VarAssignment& x, const std::vector<bool>& ge,
                     const std::vector<bool>& le, const Scalar& q, const Scalar& tau) {
    const int r = x.r();
    const Scalar tau_inv = tau.inverse();
    auto down = [&](int i) { return gap_label(J, mod(i, r), Gap::down, x, q); };
    const Scalar& xp = value(x, J, p);

    Scalar c = (Scalar(1) - q * tau).pow(J.size()) * divide(down(r - 1), xp);
    const Scalar shifted_p = tau_inv * down(p - 1);
    for (std::size_t l = 0; l < x.values[p].size(); ++l) {
        const Scalar& xl = x.values[p][l];
        if (!ge[l]) c *= shifted_p - xl;
        if (!le[l]) c = divide(c, xp - xl);
    }
    for (int i = 0; i < r; ++i) {
        if (i == p) continue;
        const Scalar num_label = tau_inv * down(i - 1);
        const Scalar den_label = down(i);
        for (int l = 0; l < static_cast<int>(x.values[i].size()); ++l) {
            if (J.has(i) && J.var(i) == l) continue;
            const Scalar& xl = x.values[i][l];
            c *= divide(num_label - xl, den_label - xl);
        }
    }
    const VarAssignment tx = apply_T(J, x, ShiftDir::forward, q);
    const Scalar qt_inv = (q * tau).inverse();
    for (int i = 0; i < r; ++i) {
        if (i == p || !J.has(i)) continue;
        const Scalar& xi = value(x, J, i);
        const Scalar& ti = value(tx, J, i);
        c *= divide(qt_inv * ti, xi - ti);
    }
    return c;
}

Scalar coefficient_Dstar(int p, const ShiftPattern& J, const VarAssignment& x, const std::vector<bool>& ge,
                         const std::vector<bool>& le, const Scalar& q, const Scalar& tau) {
    const int r = x.r();
    auto up = [&](int i) { return gap_label(J, mod(i, r), Gap::up, x, q); };
    const Scalar& xp = value(x, J, p);

    Scalar c = (Scalar(1) - (q * tau).inverse()).pow(J.size()) * divide(up(p + 1), up(0));
    const Scalar shifted_p = tau * up(p + 1);
    for (std::size_t l = 0; l < x.values[p].size(); ++l) {
        const Scalar& xl = x.values[p][l];
        if (!ge[l]) c *= shifted_p - xl;
        if (!le[l]) c = divide(c, xp - xl);
    }
    for (int i = 0; i < r; ++i) {
        if (i == p) continue;
        const Scalar num_label = tau * up(i + 1);
        const Scalar den_label = up(i);
        for (int l = 0; l < static_cast<int>(x.values[i].size()); ++l) {
            if (J.has(i) && J.var(i) == l) continue;
            const Scalar& xl = x.values[i][l];
            c *= divide(num_label - xl, den_label - xl);
        }
    }
    const VarAssignment tx = apply_T(J, x, ShiftDir::inverse, q);
    const Scalar qt = q * tau;
    for (int i = 0; i < r; ++i) {
        if (i == p || !J.has(i)) continue;
        const Scalar& xi = value(x, J, i);
        const Scalar& ti = value(tx, J, i);
        c *= divide(qt * ti, xi - ti);
    }
    return c;
}

// Sum of products c_k f_k over one common denominator.  Reducing after every
// addition makes the numerators grow and costs a large gcd per term; here
// only the denominators meet a gcd until the single final reduction.
class LazySum {
public:
    void add(const Scalar& c, const Scalar& f) {
        if (!c.is_zero() && !f.is_zero()) terms_.emplace_back(c, f);
    }

    Scalar value() const {
        BiPoly den(1);
        std::vector<BiPoly> dens;
        for (const auto& [c, f] : terms_) {
            dens.push_back(c.den() * f.den());
            if (!dens.back().is_constant()) den *= dens.back().divexact(gcd(den, dens.back()));
        }
        BiPoly num;
        for (std::size_t k = 0; k < terms_.size(); ++k)
            num += terms_[k].first.num() * terms_[k].second.num() * den.divexact(dens[k]);
        return Scalar(num, den);
    }

private:
    std::vector<std::pair<Scalar, Scalar>> terms_;
};

void ordered_tuples(const std::vector<ShiftPattern>& patterns, int p, int n, std::vector<int>& cur,
                    std::vector<bool>& used, const std::function<void(const std::vector<int>&)>& visit) {
    if (static_cast<int>(cur.size()) == n) {
        visit(cur);
        return;
    }
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        int v = patterns[k].var(p);
        if (used[v]) continue;
        used[v] = true;
        cur.push_back(static_cast<int>(k));
        ordered_tuples(patterns, p, n, cur, used, visit);
        cur.pop_back();
        used[v] = false;
    }
}

}  // namespace

ShiftPattern::ShiftPattern(std::vector<int> chosen) : chosen_(std::move(chosen)) {
    if (chosen_.empty()) throw Error("ShiftPattern: r must be positive");
    for (int c : chosen_) {
        if (c < -1) throw Error("ShiftPattern: bad variable index");
    }
}

int ShiftPattern::size() const {
    return static_cast<int>(std::count_if(chosen_.begin(), chosen_.end(), [](int c) { return c >= 0; }));
}

int ShiftPattern::mod_color(int i) const { return mod(i, r()); }

Scalar gap_label(const ShiftPattern& J, int i, Gap dir, const VarAssignment& x, const Scalar& q) {
    const int r = J.r();
    if (J.empty()) throw Error("gap_label: empty shift pattern");
    for (int d = 0; d < r; ++d) {
        int c = dir == Gap::down ? mod(i - d, r) : mod(i + d, r);
        if (J.has(c)) return q_pow(q, dir == Gap::down ? d : -d) * value(x, J, c);
    }
    throw Error("gap_label: unreachable");
}

VarAssignment apply_T(const ShiftPattern& J, const VarAssignment& x, ShiftDir dir, const Scalar& q) {
    const int r = J.r();
    if (x.r() != r) throw Error("apply_T: color count mismatch");
    VarAssignment y = x;
    for (int i = 0; i < r; ++i) {
        if (!J.has(i)) continue;
        for (int d = 1; d <= r; ++d) {
            int c = dir == ShiftDir::forward ? mod(i - d, r) : mod(i + d, r);
            if (J.has(c)) {
                y.values[i][J.var(i)] = q_pow(q, dir == ShiftDir::forward ? d : -d) * value(x, J, c);
                break;
            }
        }
    }
    return y;
}

std::vector<ShiftPattern> shift_patterns(const NVec& N, int color) {
    const int r = static_cast<int>(N.size());
    std::vector<ShiftPattern> out;
    ShiftPattern cur(r);
    std::function<void(int)> rec = [&](int i) {
        if (i == r) {
            if (!cur.empty()) out.push_back(cur);
            return;
        }
        if (i != color) {
            cur.set(i, -1);
            rec(i + 1);
        }
        for (int l = 0; l < N[i]; ++l) {
            cur.set(i, l);
            rec(i + 1);
        }
        cur.set(i, -1);
    };
    rec(0);
    return out;
}

Scalar apply_D(int p, int n, const Evaluator& f, const VarAssignment& x, DKind kind, Convention convention,
               const Params& params, const OperatorLimits& limits) {
    const int r = x.r();
    if (p < 0 || p >= r) throw Error("apply_D: color out of range");
    if (n < 0) throw Error("apply_D: negative degree");
    const NVec N = x.counts();
    check_limits(N, n, limits);
    if (n == 0) return f(x);
    if (N[p] < n) return Scalar();  // no p-distinct tuples
    check_distinct(x);

    const Scalar& q = params.q;
    const Scalar tau = tau_of(params, convention);
    const auto patterns = shift_patterns(N, p);

    LazySum total;
    std::vector<int> cur;
    std::vector<bool> used(N[p], false);
    ordered_tuples(patterns, p, n, cur, used, [&](const std::vector<int>& tuple) {
        VarAssignment y = x;
        Scalar coeff(1);
        for (int a = 0; a < n && !coeff.is_zero(); ++a) {
            std::vector<bool> ge(N[p], false), le(N[p], false);
            for (int b = a; b < n; ++b) ge[patterns[tuple[b]].var(p)] = true;
            for (int b = 0; b <= a; ++b) le[patterns[tuple[b]].var(p)] = true;
            const ShiftPattern& J = patterns[tuple[a]];
            if (kind == DKind::D) {
                coeff *= coefficient_D(p, J, y, ge, le, q, tau);
                y = apply_T(J, y, ShiftDir::forward, q);
            } else {
                coeff *= coefficient_Dstar(p, J, y, ge, le, q, tau);
                y = apply_T(J, y, ShiftDir::inverse, q);
            }
        }
        if (!coeff.is_zero()) total.add(coeff, f(y));
    });

    const Scalar qtau = kind == DKind::D ? q * tau : (q * tau).inverse();
    Scalar pref((n * (n - 1) / 2) % 2 == 0 ? 1 : -1);
    for (int k = 1; k <= n; ++k) pref = divide(pref, Scalar(1) - qtau.pow(k));
    return pref * total.value();
}

Scalar apply_D(int p, int n, const SymFunc& f, const VarAssignment& x, DKind kind, Convention convention,
               const Params& params) {
    PowerSumForm form(f);
    return apply_D(p, n, Evaluator(std::cref(form)), x, kind, convention, params);
}

Scalar apply_NS1(int p, const Evaluator& f, const VarAssignment& x, NSKind kind, Convention convention,
                 const Params& params, const OperatorLimits& limits) {
    const int r = x.r();
    if (p < 0 || p >= r) throw Error("apply_NS1: color out of range");
    const NVec N = x.counts();
    check_limits(N, 1, limits);
    check_distinct(x);

    const Scalar& q = params.q;
    const Scalar tau = tau_of(params, convention);
    const Scalar tau_inv = tau.inverse();
    const bool star = kind == NSKind::Hstar;
    // base operator quantities: H uses (q tau), H* uses (q tau)^-1
    const Scalar qt = star ? (q * tau).inverse() : q * tau;
    const Scalar qt_inv = qt.inverse();

    LazySum total;
    for (const auto& J : shift_patterns(N)) {
        const int delta = J.has(p) ? 1 : 0;
        auto label = [&](int i) { return gap_label(J, mod(i, r), star ? Gap::up : Gap::down, x, q); };
        Scalar c = -(Scalar(1) - qt).pow(J.size() - delta);
        c *= star ? divide(label(p + 1), label(0)) : divide(label(r - 1), label(p));
        for (int i = 0; i < r; ++i) {
            const Scalar num_label = star ? tau * label(i + 1) : tau_inv * label(i - 1);
            const Scalar den_label = label(i);
            for (int l = 0; l < static_cast<int>(x.values[i].size()); ++l) {
                if (J.has(i) && J.var(i) == l) continue;
                const Scalar& xl = x.values[i][l];
                c *= divide(xl - num_label, xl - den_label);
            }
        }
        const VarAssignment tx = apply_T(J, x, star ? ShiftDir::inverse : ShiftDir::forward, q);
        for (int i = 0; i < r; ++i) {
            if (!J.has(i)) continue;
            const Scalar& xi = value(x, J, i);
            const Scalar& ti = value(tx, J, i);
            if (i == p) {
                c *= divide(qt_inv * ti - xi, xi - ti);
            } else {
                c *= divide(qt_inv * ti, xi - ti);
            }
        }
        if (!c.is_zero()) total.add(c, f(tx));
    }
    return total.value();
}

Scalar apply_NS1(int p, const SymFunc& f, const VarAssignment& x, NSKind kind, Convention convention,
                 const Params& params) {
    PowerSumForm form(f);
    return apply_NS1(p, Evaluator(std::cref(form)), x, kind, convention, params);
}

Scalar classical_macdonald(int n, const Evaluator& f, const std::vector<Scalar>& x, const Params& params) {
    const int N = static_cast<int>(x.size());
    if (n < 0 || n > N) throw Error("classical_macdonald: need 0 <= n <= N");
    const Scalar& q = params.q;
    const Scalar& t = params.t;
    VarAssignment base{{x}};
    check_distinct(base);

    LazySum total;
    std::vector<bool> in(N, false);
    std::fill(in.begin(), in.begin() + n, true);
    // in is a descending-ordered selection mask; prev_permutation walks all subsets
    do {
        Scalar c(1);
        VarAssignment y = base;
        for (int i = 0; i < N; ++i) {
            if (!in[i]) continue;
            y.values[0][i] = q * x[i];
            for (int j = 0; j < N; ++j) {
                if (!in[j]) c *= divide(t * x[i] - x[j], x[i] - x[j]);
            }
        }
        total.add(c, f(y));
    } while (std::prev_permutation(in.begin(), in.end()));
    return t.pow(n * (n - 1) / 2) * total.value();
}

}  // namespace wreath
