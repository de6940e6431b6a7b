#include "wreath/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "wreath/verify.hpp"

namespace wreath {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Options {
    int r = 0;
    std::string lambda, alpha, N, quot, op, convention = "t";
    int p = 0, n = 1, degree = 0, samples = 5, symbolic = 1, max_size = 12;
    std::uint64_t seed = 20240601;
    bool csv = false;
};

Convention convention_of(const std::string& s) {
    if (s == "t") return Convention::t;
    if (s == "t-inverse") return Convention::t_inverse;
    throw UsageError("--convention must be t or t-inverse");
}

std::string convention_name(Convention c) { return c == Convention::t ? "t" : "t-inverse"; }

void require_r(const Options& o) {
    if (o.r < 1) throw UsageError("--r must be a positive integer");
}

std::vector<int> sized_ints(const std::string& text, int r, const char* flag) {
    std::vector<int> v = parse_ints(text);
    if (static_cast<int>(v.size()) != r) throw UsageError(std::string(flag) + " must have length r");
    return v;
}

RootVec alpha_of(const Options& o) {
    if (o.alpha.empty()) return RootVec(o.r, 0);
    RootVec a = sized_ints(o.alpha, o.r, "--alpha");
    int sum = 0;
    for (int v : a) sum += v;
    if (sum != 0) throw UsageError("--alpha must sum to zero");
    return a;
}

Partition lambda_of(const Options& o) {
    if (o.lambda.empty()) throw UsageError("--lambda is required");
    return parse_partition(o.lambda);
}

NVec N_of(const Options& o, const RootVec& alpha) {
    NVec N = sized_ints(o.N, o.r, "--N");
    if (!is_compatible(N, alpha)) throw UsageError("--N is not compatible with the core of --lambda / --alpha");
    return N;
}

void check_color(const Options& o) {
    if (o.p < 0 || o.p >= o.r) throw UsageError("--p must lie in [0, r)");
}

std::vector<DKind> d_kinds(const std::string& op) {
    if (op.empty() || op == "both") return {DKind::D, DKind::Dstar};
    if (op == "D") return {DKind::D};
    if (op == "Dstar") return {DKind::Dstar};
    throw UsageError("--op must be D, Dstar or both");
}

std::vector<NSKind> ns_kinds(const std::string& op) {
    if (op.empty() || op == "both") return {NSKind::H, NSKind::Hstar};
    if (op == "H") return {NSKind::H};
    if (op == "Hstar") return {NSKind::Hstar};
    throw UsageError("--op must be H, Hstar or both");
}

Json block_entry(const Partition& lam, int r) {
    const CoreQuot cq = core_quot(lam, r);
    return Json{{"lambda", to_json(lam)}, {"quot", to_json(cq.quot)}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

int emit(std::ostream& out, const Json& j, bool ok) {
    out << j.dump() << '\n';
    return ok ? 0 : 1;
}

int cmd_core_quot(const Options& o, std::ostream& out) {
    require_r(o);
    const CoreQuot cq = core_quot(lambda_of(o), o.r);
    return emit(out, Json{{"core", to_json(cq.core)}, {"quot", to_json(cq.quot)}, {"charges", to_json(cq.charges)}}, true);
}

int cmd_big(const Options& o, std::ostream& out) {
    require_r(o);
    if (o.quot.empty()) throw UsageError("--quot is required");
    const MultiPartition quot = parse_multipartition(o.quot);
    if (quot.r() != o.r) throw UsageError("--quot must have r components");
    const Partition lam = big(alpha_of(o), quot);
    return emit(out, Json{{"lambda", to_json(lam)}}, true);
}

int cmd_kappa(const Options& o, std::ostream& out) {
    require_r(o);
    const RootVec k = kappa(lambda_of(o), o.r);
    return emit(out, Json{{"kappa", to_json(k)}, {"minimal_N", to_json(minimal_N(k))}}, true);
}

int cmd_compute_P(const Options& o, std::ostream& out) {
    require_r(o);
    const Convention conv = convention_of(o.convention);
    std::vector<Partition> lambdas;
    RootVec alpha;
    int degree = o.degree;
    if (!o.lambda.empty()) {
        const Partition lam = lambda_of(o);
        alpha = kappa(lam, o.r);
        degree = core_quot(lam, o.r).quot.size();
        lambdas.push_back(lam);
    } else {
        if (o.degree < 0) throw UsageError("--degree must be nonnegative");
        alpha = alpha_of(o);
        lambdas = enumerate_block(alpha, o.degree);
    }
    Json block = Json::array();
    for (const Partition& lam : lambdas) {
        Json e = block_entry(lam, o.r);
        e["P"] = to_json(compute_P(lam, o.r, conv));
        block.push_back(e);
    }
    return emit(out,
                Json{{"r", o.r}, {"alpha", to_json(alpha)}, {"degree", degree}, {"convention", convention_name(conv)},
                     {"block", block}},
                true);
}

int cmd_verify_eigen(const Options& o, std::ostream& out) {
    require_r(o);
    EigenSuite s;
    s.alpha = alpha_of(o);
    s.degree = o.degree;
    s.n = o.n;
    if (s.n < 1) throw UsageError("--n must be positive");
    s.kinds = d_kinds(o.op);
    if (!o.N.empty()) s.Ns = {N_of(o, s.alpha)};
    s.symbolic_samples = o.symbolic;
    s.rational_samples = o.samples;
    s.seed = o.seed;
    s.convention = convention_of(o.convention);
    const SuiteReport rep = verify_eigen(s);
    return emit(out, rep.to_json(), rep.passed());
}

int cmd_verify_ns(const Options& o, std::ostream& out) {
    require_r(o);
    NSSuite s;
    s.alpha = alpha_of(o);
    s.degree = o.degree;
    s.kinds = ns_kinds(o.op);
    if (!o.N.empty()) s.Ns = {N_of(o, s.alpha)};
    s.symbolic_samples = o.symbolic;
    s.rational_samples = o.samples;
    s.seed = o.seed;
    s.convention = convention_of(o.convention);
    const SuiteReport rep = verify_ns(s);
    return emit(out, rep.to_json(), rep.passed());
}

int cmd_verify_bijections(const Options& o, std::ostream& out) {
    std::vector<int> rs;
    if (o.r > 0) {
        rs = {o.r};
    } else {
        rs = {1, 2, 3, 4, 5};
    }
    if (o.max_size < 0) throw UsageError("--max-size must be nonnegative");
    const BijectionReport rep = verify_bijections(o.max_size, rs);
    return emit(out, rep.to_json(), rep.failures.empty());
}

int cmd_pieri(const Options& o, std::ostream& out) {
    require_r(o);
    check_color(o);
    if (o.n < 1) throw UsageError("--n must be positive");
    const Partition lam = lambda_of(o);
    Json terms = Json::array();
    for (const auto& [mu, c] : pieri_expand(lam, o.p, o.n, o.r)) terms.push_back(Json{{"mu", to_json(mu)}, {"coeff", to_json(c)}});
    return emit(out, Json{{"lambda", to_json(lam)}, {"p", o.p}, {"n", o.n}, {"expansion", terms}}, true);
}

// One eigenvalue, or with no --lambda a table over the block and all colors.
int cmd_eigen(const Options& o, std::ostream& out) {
    require_r(o);
    const Convention conv = convention_of(o.convention);
    const bool ns = o.op == "H" || o.op == "Hstar";
    if (!ns && !o.op.empty() && o.op != "D" && o.op != "Dstar") throw UsageError("--op must be D, Dstar, H or Hstar");
    auto value = [&](const Partition& lam, const NVec& N, int p) {
        if (ns) return ns_eigenvalue(lam, N, p, o.op == "H" ? NSKind::H : NSKind::Hstar, conv);
        return eigenvalue_D(lam, N, p, o.n, o.op == "Dstar" ? DKind::Dstar : DKind::D, conv);
    };
    if (!o.lambda.empty()) {
        const Partition lam = lambda_of(o);
        check_color(o);
        if (o.N.empty()) throw UsageError("--N is required with --lambda");
        const NVec N = N_of(o, kappa(lam, o.r));
        return emit(out, to_json(value(lam, N, o.p)), true);
    }
    const RootVec alpha = alpha_of(o);
    const NVec N = o.N.empty() ? lift_N(alpha, o.n) : N_of(o, alpha);
    const std::string op = o.op.empty() ? "D" : o.op;
    if (o.csv) {
        out << "lambda,p,n,op,eigenvalue\n";
        for (const Partition& lam : enumerate_block(alpha, o.degree)) {
            for (int p = 0; p < o.r; ++p) {
                out << csv_field(lam.to_string()) << ',' << p << ',' << o.n << ',' << op << ','
                    << csv_field(value(lam, N, p).to_string()) << '\n';
            }
        }
        return 0;
    }
    Json rows = Json::array();
    for (const Partition& lam : enumerate_block(alpha, o.degree)) {
        Json vals = Json::array();
        for (int p = 0; p < o.r; ++p) vals.push_back(to_json(value(lam, N, p)));
        Json e = block_entry(lam, o.r);
        e["eigenvalues"] = vals;
        rows.push_back(e);
    }
    return emit(out, Json{{"N", to_json(N)}, {"n", o.n}, {"op", op}, {"convention", convention_name(conv)}, {"table", rows}},
                true);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wreath Macdonald polynomials and operators", "wreath"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c) {
        c->add_option("--r", o.r, "number of colors");
        c->add_option("--convention", o.convention, "t or t-inverse");
    };
    auto* core_quot_cmd = app.add_subcommand("core-quot", "r-core, r-quotient and runner charges");
    auto* big_cmd = app.add_subcommand("big", "partition with the given core and quotient");
    auto* kappa_cmd = app.add_subcommand("kappa", "root lattice point of a partition");
    auto* compute_cmd = app.add_subcommand("compute-P", "wreath Macdonald polynomials of a block");
    auto* veigen_cmd = app.add_subcommand("verify-eigen", "eigenfunction equations of the D operators");
    auto* vns_cmd = app.add_subcommand("verify-ns", "eigenfunction equations of the degree-1 Noumi-Sano operators");
    auto* vbij_cmd = app.add_subcommand("verify-bijections", "core/quotient bijection checks");
    auto* pieri_cmd = app.add_subcommand("pieri", "e_n[X^(p)] P_lambda in the P basis");
    auto* eigen_cmd = app.add_subcommand("eigen", "predicted eigenvalues");
    for (auto* c : {core_quot_cmd, big_cmd, kappa_cmd, compute_cmd, veigen_cmd, vns_cmd, vbij_cmd, pieri_cmd, eigen_cmd})
        common(c);
    for (auto* c : {core_quot_cmd, kappa_cmd, compute_cmd, pieri_cmd, eigen_cmd}) c->add_option("--lambda", o.lambda);
    for (auto* c : {big_cmd, compute_cmd, veigen_cmd, vns_cmd, eigen_cmd}) c->add_option("--alpha", o.alpha);
    for (auto* c : {compute_cmd, veigen_cmd, vns_cmd, eigen_cmd}) c->add_option("--degree", o.degree);
    for (auto* c : {veigen_cmd, vns_cmd, eigen_cmd}) c->add_option("--N", o.N);
    for (auto* c : {veigen_cmd, vns_cmd, eigen_cmd}) c->add_option("--op", o.op);
    for (auto* c : {pieri_cmd, eigen_cmd}) c->add_option("--p", o.p);
    for (auto* c : {veigen_cmd, pieri_cmd, eigen_cmd}) c->add_option("--n", o.n);
    for (auto* c : {veigen_cmd, vns_cmd}) {
        c->add_option("--samples", o.samples, "rational specializations per case");
        c->add_option("--symbolic", o.symbolic, "symbolic (q,t) points per case");
        c->add_option("--seed", o.seed);
    }
    big_cmd->add_option("--quot", o.quot, "multipartition, e.g. [[2],[],[]]");
    vbij_cmd->add_option("--max-size", o.max_size);
    eigen_cmd->add_flag("--csv", o.csv, "flatten the eigenvalue table");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*core_quot_cmd) return cmd_core_quot(o, out);
        if (*big_cmd) return cmd_big(o, out);
        if (*kappa_cmd) return cmd_kappa(o, out);
        if (*compute_cmd) return cmd_compute_P(o, out);
        if (*veigen_cmd) return cmd_verify_eigen(o, out);
        if (*vns_cmd) return cmd_verify_ns(o, out);
        if (*vbij_cmd) return cmd_verify_bijections(o, out);
        if (*pieri_cmd) return cmd_pieri(o, out);
        if (*eigen_cmd) return cmd_eigen(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        // malformed partitions and vectors, incompatible data
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace wreath
