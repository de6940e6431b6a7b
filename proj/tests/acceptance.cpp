// Acceptance checks: one PASS/FAIL line per criterion.  All comparisons are
// exact (structural equality in Q(q,t) or Q); the only tolerances are the
// wall-clock budgets below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wreath/verify.hpp"

using namespace wreath;

namespace {

// seconds
constexpr double budget_1 = 0.001;
constexpr double budget_2 = 30;
constexpr double budget_3 = 1;
constexpr double budget_4 = 600;
constexpr double budget_5 = 1;
constexpr double budget_6 = 1800;
constexpr double budget_9 = 300;

constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Tally {
    long samples = 0;
    long failed = 0;
    std::string first_failure;

    void add(const SuiteReport& rep) {
        for (const auto& s : rep.samples) {
            ++samples;
            if (!s.equal) {
                if (failed++ == 0) first_failure = s.label + ": " + s.lhs.to_string() + " != " + s.rhs.to_string();
            }
        }
    }
    void check(bool ok, const std::string& what) {
        ++samples;
        if (!ok && failed++ == 0) first_failure = what;
    }
    Outcome outcome(const std::string& unit = "checks") const {
        Outcome o;
        o.ok = failed == 0;
        o.detail = std::to_string(samples) + " " + unit + ", " + std::to_string(failed) + " failed";
        if (failed) o.detail += "; first: " + first_failure;
        return o;
    }
};

RootVec neg(RootVec a) {
    for (auto& v : a) v = -v;
    return a;
}

std::vector<RootVec> small_alphas(int r) { return {RootVec(r, 0), simple_root(1, r), neg(simple_root(1, r))}; }

int failures = 0;
std::vector<int> selected;  // empty: all

void criterion(int id, const std::string& name, double budget, const std::function<Outcome()>& body) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) return;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget > 0 && secs > budget) {
        o.ok = false;
        o.detail += "; over the time budget";
    }
    if (!o.ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << "criterion " << id << " " << (o.ok ? "PASS" : "FAIL") << " [" << name << "] " << o.detail << " ("
              << timing << ")" << std::endl;
}

Outcome core_quot_regression() {
    // timed in isolation; the criterion wrapper adds the comparison work
    const auto start = std::chrono::steady_clock::now();
    const CoreQuot cq = core_quot({4, 3, 2, 2}, 3);
    const RootVec k = kappa({2}, 3);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Tally t;
    t.check(cq.core == Partition{2}, "core of (4,3,2,2)");
    t.check(cq.quot == MultiPartition({{1}, {}, {2}}), "quotient of (4,3,2,2)");
    t.check(cq.charges == RootVec{1, -1, 0}, "charges of (4,3,2,2)");
    t.check(k == RootVec{1, -1, 0}, "kappa((2))");
    t.check(secs < budget_1, "runtime");
    return t.outcome();
}

Outcome bijection_suite() {
    const BijectionReport rep = verify_bijections(18, {1, 2, 3, 4, 5});
    Outcome o{rep.failures.empty(), std::to_string(rep.checked) + " partitions, " + std::to_string(rep.failures.size()) +
                                        " failures"};
    if (!rep.failures.empty()) o.detail += "; first: " + rep.failures.front();
    return o;
}

Outcome big_table() {
    const RootVec a = neg(simple_root(1, 3));
    auto mp = [](std::vector<Partition> v) { return MultiPartition(std::move(v)); };
    const std::vector<std::pair<MultiPartition, Partition>> table = {
        {mp({{2}, {}, {}}), {9, 1}},
        {mp({{1, 1}, {}, {}}), {6, 4}},
        {mp({{1}, {}, {1}}), {6, 2, 2}},
        {mp({{1}, {1}, {}}), {6, 1, 1, 1, 1}},
        {mp({{}, {}, {2}}), {4, 4, 2}},
        {mp({{}, {2}, {}}), {3, 3, 2, 1, 1}},
        {mp({{}, {1}, {1}}), {3, 2, 2, 2, 1}},
        {mp({{}, {}, {1, 1}}), {3, 2, 2, 1, 1, 1}},
        {mp({{}, {1, 1}, {}}), {3, 1, 1, 1, 1, 1, 1, 1}},
    };
    Tally t;
    for (const auto& [quot, image] : table) {
        t.check(big(a, quot) == image, "big " + quot.to_string());
        const CoreQuot cq = core_quot(image, 3);
        t.check(cq.quot == quot && cq.charges == a, "core_quot " + image.to_string());
    }
    return t.outcome();
}

Outcome degree_one_eigen() {
    Tally t;
    for (int r : {2, 3}) {
        for (const RootVec& alpha : small_alphas(r)) {
            const NVec N0 = minimal_N(alpha);
            NVec N1 = N0;
            for (auto& v : N1) ++v;
            for (int d = 0; d <= 2; ++d) {
                EigenSuite s;
                s.alpha = alpha;
                s.degree = d;
                s.n = 1;
                s.kinds = {DKind::D, DKind::Dstar};
                s.Ns = {N0, N1};
                s.symbolic_samples = 3;
                s.rational_samples = 5;
                s.seed = seed + 100 * r + d;
                t.add(verify_eigen(s));
            }
        }
    }
    return t.outcome("samples");
}

Outcome worked_examples() {
    Tally t;
    const Scalar q = Scalar::q(), tt = Scalar::t();
    t.check(eigenvalue_D({3, 1, 1}, {2, 1, 0}, 1, 1, DKind::D) == q, "eigenvalue (3,1,1)");
    t.check(eigenvalue_D({1, 1}, {1, 1}, 0, 1, DKind::D) == q, "eigenvalue (1,1)");
    t.check(eigenvalue_D({1}, {0, 2}, 1, 2, DKind::D) == q * tt, "eigenvalue (1)");
    // and the operators themselves, at symbolic (q,t) and random points
    std::mt19937_64 rng(seed);
    struct Case {
        int r;
        Partition lam;
        NVec N;
        int p, n;
        Scalar ev;
    };
    const std::vector<Case> cases = {{3, {3, 1, 1}, {2, 1, 0}, 1, 1, q}, {2, {1, 1}, {1, 1}, 0, 1, q}, {2, {1}, {0, 2}, 1, 2, q * tt}};
    for (const auto& c : cases) {
        const PowerSumForm P(compute_P(c.lam, c.r, Convention::t));
        for (int s = 0; s < 3; ++s) {
            const VarAssignment x = random_assignment(rng, c.N);
            t.check(apply_D(c.p, c.n, Evaluator(std::cref(P)), x, DKind::D, Convention::t, Params::symbolic()) == c.ev * P(x),
                    "operator on " + c.lam.to_string());
        }
    }
    return t.outcome();
}

Outcome degree_two_eigen() {
    Tally t;
    for (int r : {2, 3}) {
        for (const RootVec& alpha : small_alphas(r)) {
            for (int d = 0; d <= 2; ++d) {
                EigenSuite s;
                s.alpha = alpha;
                s.degree = d;
                s.n = 2;
                s.kinds = {DKind::D, DKind::Dstar};
                s.Ns = {lift_N(alpha, 2)};
                s.symbolic_samples = 0;
                s.rational_samples = 5;
                s.seed = seed + 1000 + 100 * r + d;
                t.add(verify_eigen(s));
            }
        }
    }
    return t.outcome("samples");
}

Outcome classical_reduction() {
    Tally t;
    std::mt19937_64 rng(seed + 7);
    const Params symbolic = Params::symbolic();
    for (int N = 1; N <= 4; ++N) {
        for (int n = 1; n <= std::min(N, 2); ++n) {
            for (int trial = 0; trial < 3; ++trial) {
                SymFunc f = SymFunc::one(1);
                for (int d = 1; d <= 3; ++d)
                    for (const Partition& mu : partitions_of(d))
                        f = f + Scalar(random_rational(rng)) * SymFunc::schur(mu, 0, 1);
                const PowerSumForm F(f);
                const VarAssignment x = random_assignment(rng, {N});
                const std::string id = "N=" + std::to_string(N) + " n=" + std::to_string(n);
                t.check(apply_D(0, n, Evaluator(std::cref(F)), x, DKind::D, Convention::t, symbolic) ==
                            classical_macdonald(n, Evaluator(std::cref(F)), x.values[0], symbolic),
                        "random polynomial " + id);
            }
            for (int d = 0; d <= 3; ++d) {
                for (const Partition& lam : partitions_of(d)) {
                    if (lam.length() > N) continue;
                    const PowerSumForm P(compute_P(lam, 1, Convention::t));
                    std::vector<Scalar> spectrum;
                    for (int b = 1; b <= N; ++b) spectrum.push_back(Scalar::monomial(lam.part(b), N - b));
                    const VarAssignment x = random_assignment(rng, {N});
                    t.check(classical_macdonald(n, Evaluator(std::cref(P)), x.values[0], symbolic) ==
                                elementary(spectrum, n) * P(x),
                            "classical eigenvalue " + lam.to_string());
                    t.check(eigenvalue_D(lam, {N}, 0, n, DKind::D) == elementary(spectrum, n), "closed form " + lam.to_string());
                }
            }
        }
    }
    return t.outcome();
}

Outcome shift_covariance() {
    Tally t;
    for (const auto& [r, max_degree] : {std::pair{2, 4}, std::pair{3, 3}}) {
        const auto cases = shift_cases(r, 10, max_degree);
        t.check(cases.size() == 10, "fewer than 10 cases at r=" + std::to_string(r));
        t.add(verify_shift(cases, 2, seed + r));
    }
    return t.outcome();
}

Outcome noumi_sano() {
    Tally t;
    const Scalar q = Scalar::q(), tt = Scalar::t();
    const Scalar expected = -(q / tt.pow(2)) * (1 - tt.pow(2)) / (1 - q.pow(2));
    std::mt19937_64 rng(seed + 9);
    const PowerSumForm one(SymFunc::one(2));
    for (int s = 0; s < 3; ++s) {
        const VarAssignment x = random_assignment(rng, {1, 1});
        t.check(apply_NS1(0, Evaluator(std::cref(one)), x, NSKind::H, Convention::t_inverse, Params::symbolic()) == expected,
                "r=2 example operator");
    }
    t.check(ns_eigenvalue({}, {1, 1}, 0, NSKind::H, Convention::t_inverse) == expected, "r=2 example closed form");
    for (int r : {2, 3}) {
        std::vector<RootVec> alphas{RootVec(r, 0)};
        for (int i = 0; i < r; ++i) {
            alphas.push_back(simple_root(i, r));
            alphas.push_back(neg(simple_root(i, r)));
        }
        if (r == 2) alphas.resize(3);  // alpha_0 = -alpha_1
        for (const RootVec& alpha : alphas) {
            for (int d = 0; d <= 1; ++d) {
                NSSuite s;
                s.alpha = alpha;
                s.degree = d;
                s.symbolic_samples = 1;
                s.rational_samples = 2;
                s.seed = seed + 10 * r + d;
                t.add(verify_ns(s));
            }
        }
    }
    return t.outcome();
}

Outcome pieri_support() {
    const PieriReport rep = verify_pieri(3, 10);
    Outcome o{rep.failures.empty() && rep.terms > 0,
              std::to_string(rep.terms) + " nonzero coefficients, " + std::to_string(rep.failures.size()) + " violations"};
    if (!rep.failures.empty()) o.detail += "; first: " + rep.failures.front();
    return o;
}

Outcome basis_rank() {
    Tally t;
    for (int r : {2, 3}) {
        for (const RootVec& alpha : small_alphas(r)) {
            for (int d = 0; d <= 2; ++d) {
                const BasisReport rep = verify_basis(alpha, d, seed + 10 * r + d);
                std::ostringstream id;
                id << "r=" << r << " degree " << d << " rank " << rep.rank << " of " << rep.size;
                t.check(rep.rank == rep.size, id.str());
            }
        }
    }
    return t.outcome("blocks");
}

}  // namespace

// Optional arguments select criteria by number.
int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    criterion(1, "core/quotient regression", 0, core_quot_regression);
    criterion(2, "bijection suite", budget_2, bijection_suite);
    criterion(3, "big table", budget_3, big_table);
    criterion(4, "degree-1 eigenfunction equations", budget_4, degree_one_eigen);
    criterion(5, "worked examples", budget_5, worked_examples);
    criterion(6, "n=2 eigenfunction equations", budget_6, degree_two_eigen);
    criterion(7, "r=1 reduction", 0, classical_reduction);
    criterion(8, "shift covariance", 0, shift_covariance);
    criterion(9, "Noumi-Sano degree 1", budget_9, noumi_sano);
    criterion(10, "Pieri support", 0, pieri_support);
    criterion(11, "basis rank", 0, basis_rank);
    return failures == 0 ? 0 : 1;
}
