#include "wreath/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreath {

namespace {

constexpr int max_attempts = 50;

std::string vec_text(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

std::string kind_name(DKind k) { return k == DKind::D ? "D" : "Dstar"; }
std::string kind_name(NSKind k) { return k == NSKind::H ? "H" : "Hstar"; }

// Runs `body(q0, t0)` until it finishes without hitting a pole.
template <class Body>
Sample draw(std::mt19937_64& rng, int height, const std::string& label, Body body) {
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        try {
            Sample s = body(random_rational(rng, height), random_rational(rng, height));
            s.label = label;
            return s;
        } catch (const PoleError&) {
            continue;
        }
    }
    throw Error("no pole-free sample found for " + label);
}

std::vector<NVec> resolve_Ns(const std::vector<NVec>& given, const RootVec& alpha, int at_least) {
    if (!given.empty()) return given;
    return {lift_N(alpha, at_least)};
}

Sample vanishing_sample(std::mt19937_64& rng, const Partition& lam, int r, const NVec& N, const std::string& where,
                        int height) {
    const SymFunc P = compute_P(lam, r, Convention::t);
    return draw(rng, height, where + " vanishes", [&](const Rational& q0, const Rational& t0) {
        Sample out;
        out.lhs = evaluate(specialize(P, q0, t0), random_assignment(rng, N, height));
        out.equal = out.lhs.is_zero();
        return out;
    });
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(samples.begin(), samples.end(), [](const Sample& s) { return s.equal; });
}

Json SuiteReport::to_json() const {
    Json results = Json::array();
    for (const auto& s : samples) {
        results.push_back(Json{{"case", s.label}, {"lhs", wreath::to_json(s.lhs)}, {"rhs", wreath::to_json(s.rhs)}, {"equal", s.equal}});
    }
    return Json{{"cases", cases}, {"results", results}, {"all_equal", passed()}};
}

NVec lift_N(const RootVec& alpha, int at_least) {
    NVec N = minimal_N(alpha);
    const int low = *std::min_element(N.begin(), N.end());
    for (auto& v : N) v += std::max(0, at_least - low);
    return N;
}

SuiteReport verify_eigen(const EigenSuite& suite) {
    const int r = static_cast<int>(suite.alpha.size());
    std::mt19937_64 rng(suite.seed);
    SuiteReport report;
    for (const NVec& N : resolve_Ns(suite.Ns, suite.alpha, suite.n)) {
        if (!is_compatible(N, suite.alpha)) throw Error("verify_eigen: N " + vec_text(N) + " is not compatible");
        for (const Partition& lam : enumerate_block(suite.alpha, suite.degree)) {
            std::string where = "lambda=" + lam.to_string() + " N=" + vec_text(N);
            if (lam.length() > total(N)) {
                // no spectral variables; the finitization must vanish instead
                ++report.cases;
                report.samples.push_back(vanishing_sample(rng, lam, r, N, where, suite.height));
                continue;
            }
            const SymFunc P = compute_P(lam, r, suite.convention);
            const PowerSumForm Pform(P);
            for (int p = 0; p < r; ++p) {
                for (DKind kind : suite.kinds) {
                    ++report.cases;
                    const Scalar ev = eigenvalue_D(lam, N, p, suite.n, kind, suite.convention);
                    const std::string id =
                        where + " p=" + std::to_string(p) + " n=" + std::to_string(suite.n) + " op=" + kind_name(kind);
                    for (int s = 0; s < suite.symbolic_samples; ++s) {
                        report.samples.push_back(draw(rng, suite.height, id + " symbolic#" + std::to_string(s + 1),
                                                      [&](const Rational&, const Rational&) {
                            VarAssignment x = random_assignment(rng, N, suite.height);
                            Sample out;
                            out.lhs = apply_D(p, suite.n, Evaluator(std::cref(Pform)), x, kind, suite.convention,
                                              Params::symbolic());
                            out.rhs = ev * Pform(x);
                            out.equal = out.lhs == out.rhs;
                            return out;
                        }));
                    }
                    for (int s = 0; s < suite.rational_samples; ++s) {
                        report.samples.push_back(draw(rng, suite.height, id + " rational#" + std::to_string(s + 1),
                                                      [&](const Rational& q0, const Rational& t0) {
                            const PowerSumForm F(specialize(P, q0, t0));
                            VarAssignment x = random_assignment(rng, N, suite.height);
                            Sample out;
                            out.lhs = apply_D(p, suite.n, Evaluator(std::cref(F)), x, kind, suite.convention,
                                              Params::at(q0, t0));
                            out.rhs = Scalar(ev.evaluate(q0, t0)) * F(x);
                            out.equal = out.lhs == out.rhs;
                            return out;
                        }));
                    }
                }
            }
        }
    }
    return report;
}

SuiteReport verify_ns(const NSSuite& suite) {
    const int r = static_cast<int>(suite.alpha.size());
    std::mt19937_64 rng(suite.seed);
    SuiteReport report;
    for (const NVec& N : resolve_Ns(suite.Ns, suite.alpha, 1)) {
        for (const Partition& lam : enumerate_block(suite.alpha, suite.degree)) {
            std::string where = "lambda=" + lam.to_string() + " N=" + vec_text(N);
            if (lam.length() > total(N)) {
                // no spectral variables; the finitization must vanish instead
                ++report.cases;
                report.samples.push_back(vanishing_sample(rng, lam, r, N, where, suite.height));
                continue;
            }
            const SymFunc P = compute_P(lam, r, suite.convention);
            const PowerSumForm Pform(P);
            for (int p = 0; p < r; ++p) {
                if (suite.series_oracle) {
                    // the printed product carries one extra factor of q
                    SeriesOracle o = ns_eigen_series_oracle(lam, N, p, NSKind::H);
                    Sample s;
                    s.label = where + " p=" + std::to_string(p) + " pochhammer";
                    s.lhs = Scalar::q() * f_component(lam, total(N), r, p);
                    s.rhs = Scalar(o.series);
                    s.equal = series_agrees(s.lhs, o);
                    report.samples.push_back(s);
                }
                for (NSKind kind : suite.kinds) {
                    ++report.cases;
                    const Scalar ev = ns_eigenvalue(lam, N, p, kind, suite.convention);
                    const std::string id = where + " p=" + std::to_string(p) + " op=" + kind_name(kind);
                    for (int s = 0; s < suite.symbolic_samples; ++s) {
                        report.samples.push_back(draw(rng, suite.height, id + " symbolic#" + std::to_string(s + 1),
                                                      [&](const Rational&, const Rational&) {
                            VarAssignment x = random_assignment(rng, N, suite.height);
                            Sample out;
                            out.lhs = apply_NS1(p, Evaluator(std::cref(Pform)), x, kind, suite.convention,
                                                Params::symbolic());
                            out.rhs = ev * Pform(x);
                            out.equal = out.lhs == out.rhs;
                            return out;
                        }));
                    }
                    for (int s = 0; s < suite.rational_samples; ++s) {
                        report.samples.push_back(draw(rng, suite.height, id + " rational#" + std::to_string(s + 1),
                                                      [&](const Rational& q0, const Rational& t0) {
                            const PowerSumForm F(specialize(P, q0, t0));
                            VarAssignment x = random_assignment(rng, N, suite.height);
                            Sample out;
                            out.lhs = apply_NS1(p, Evaluator(std::cref(F)), x, kind, suite.convention,
                                                Params::at(q0, t0));
                            out.rhs = Scalar(ev.evaluate(q0, t0)) * F(x);
                            out.equal = out.lhs == out.rhs;
                            return out;
                        }));
                    }
                }
            }
        }
    }
    return report;
}

Json BijectionReport::to_json() const {
    return Json{{"checked", checked}, {"failures", failures}, {"all_passed", failures.empty()}};
}

BijectionReport verify_bijections(int max_size, const std::vector<int>& rs) {
    BijectionReport report;
    for (int r : rs) {
        for (int n = 0; n <= max_size; ++n) {
            for (const Partition& lam : partitions_of(n)) {
                ++report.checked;
                const CoreQuot cq = core_quot(lam, r);
                auto fail = [&](const std::string& what) {
                    report.failures.push_back("r=" + std::to_string(r) + " lambda=" + lam.to_string() + ": " + what);
                };
                if (big(cq.charges, cq.quot) != lam) fail("big(charges, quot) differs");
                if (cq.core != strip_ribbon_core(lam, r)) fail("abacus core differs from ribbon stripping");
                if (!is_core(cq.core, r)) fail("core has an r-hook");
                if (std::accumulate(cq.charges.begin(), cq.charges.end(), 0) != 0) fail("runner charges do not sum to 0");
                if (kappa(lam, r) != cq.charges) fail("kappa differs from the runner charges");
                if (kappa(cq.core, r) != cq.charges) fail("kappa(core) differs from the runner charges");
                if (lam.size() != cq.core.size() + r * cq.quot.size()) fail("|lambda| != |core| + r |quot|");
            }
        }
    }
    return report;
}

}  // namespace wreath

namespace wreath {

std::vector<ShiftCase> shift_cases(int r, int count, int max_degree) {
    std::vector<Partition> cores;
    for (int n = 0; n <= 12; ++n)
        for (const Partition& c : partitions_of(n))
            if (is_core(c, r)) cores.push_back(c);
    std::vector<std::pair<int, ShiftCase>> found;
    for (const Partition& core : cores) {
        const RootVec alpha = kappa(core, r);
        for (int k = 0; k <= max_degree; ++k) {
            NVec N = minimal_N(alpha);
            for (auto& v : N) v += k;
            const int target_shift = total(N);
            if (target_shift == 0) continue;
            for (int d = 0; d + target_shift <= max_degree; ++d) {
                for (const Partition& lam : enumerate_block(alpha, d)) {
                    if (lam.length() > total(N)) continue;
                    found.push_back({d + target_shift, {r, N, lam, add_rectangle(lam, total(N), r)}});
                }
            }
        }
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ShiftCase> out;
    for (const auto& [deg, c] : found) {
        if (static_cast<int>(out.size()) == count) break;
        out.push_back(c);
    }
    return out;
}

SuiteReport verify_shift(const std::vector<ShiftCase>& cases, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    SuiteReport report;
    for (const ShiftCase& c : cases) {
        ++report.cases;
        const SymFunc small = compute_P(c.lambda, c.r, Convention::t);
        const SymFunc large = compute_P(c.shifted, c.r, Convention::t);
        const std::string id = "r=" + std::to_string(c.r) + " N=" + vec_text(c.N) + " lambda=" + c.lambda.to_string() +
                               " shifted=" + c.shifted.to_string();
        for (int s = 0; s < samples; ++s) {
            report.samples.push_back(draw(rng, 50, id + " #" + std::to_string(s + 1),
                                          [&](const Rational& q0, const Rational& t0) {
                VarAssignment x = random_assignment(rng, c.N);
                Sample out;
                out.lhs = x.product() * evaluate(specialize(small, q0, t0), x);
                out.rhs = evaluate(specialize(large, q0, t0), x);
                out.equal = out.lhs == out.rhs;
                return out;
            }));
        }
    }
    return report;
}

Json PieriReport::to_json() const {
    return Json{{"terms", terms}, {"failures", failures}, {"all_passed", failures.empty()}};
}

PieriReport verify_pieri(int r, int max_core_size) {
    PieriReport report;
    for (int n = 0; n <= max_core_size; ++n) {
        for (const Partition& core : partitions_of(n)) {
            if (!is_core(core, r)) continue;
            for (int p = 0; p < r; ++p) {
                for (const auto& [mu, c] : pieri_expand(core, p, 1, r)) {
                    ++report.terms;
                    const std::string id = "core=" + core.to_string() + " p=" + std::to_string(p) + " mu=" + mu.to_string();
                    if (!mu.contains(core)) {
                        report.failures.push_back(id + ": does not contain the core");
                        continue;
                    }
                    std::vector<int> colors(r, 0);
                    bool adjacent = false;
                    for (const Cell& cell : mu.cells()) {
                        if (core.contains(cell)) continue;
                        ++colors[residue(cell, r)];
                        const Cell right{cell.col + 1, cell.row};
                        if (!mu.contains(right) || core.contains(right)) continue;
                        const int a = residue(cell, r), b = residue(right, r);
                        if ((a == p && b == (p + 1) % r) || (a == (p + 1) % r && b == p)) adjacent = true;
                    }
                    if (colors != std::vector<int>(r, 1)) report.failures.push_back(id + ": colors " + vec_text(colors));
                    if (adjacent) report.failures.push_back(id + ": adjacent boxes of colors p and p+1");
                }
            }
        }
    }
    return report;
}

Json BasisReport::to_json() const {
    return Json{{"size", size}, {"rank", rank}, {"N", N}, {"nonsingular", size == rank}};
}

BasisReport verify_basis(const RootVec& alpha, int degree, std::uint64_t seed) {
    const int r = static_cast<int>(alpha.size());
    std::mt19937_64 rng(seed);
    const std::vector<Partition> block = enumerate_block(alpha, degree);
    int longest = 0;
    for (const Partition& lam : block) longest = std::max(longest, lam.length());
    NVec N = minimal_N(alpha);
    while (total(N) < longest)
        for (auto& v : N) ++v;

    const Rational q0 = random_rational(rng), t0 = random_rational(rng);
    std::vector<PowerSumForm> forms;
    for (const Partition& lam : block) forms.emplace_back(specialize(compute_P(lam, r, Convention::t), q0, t0));
    Matrix<Scalar> m;
    for (std::size_t j = 0; j < block.size(); ++j) {
        VarAssignment x = random_assignment(rng, N);
        std::vector<Scalar> row;
        for (const auto& f : forms) row.push_back(f(x));
        m.push_back(std::move(row));
    }
    return {block.size(), rank(m), N};
}

}  // namespace wreath
