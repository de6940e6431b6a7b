#include "wreath/macdonald.hpp"

#include <iostream>
#include <mutex>
#include <tuple>

#include "wreath/linalg.hpp"

namespace wreath {

namespace {

std::mutex cache_mutex;

SymFunc from_coords(int r, const std::vector<MultiPartition>& basis, const std::vector<Scalar>& x) {
    SymFunc f(r, Basis::schur);
    for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], x[i]);
    return f;
}

}  // namespace

MacdonaldBlock make_block(const RootVec& alpha, int degree) {
    MacdonaldBlock b;
    b.alpha = alpha;
    b.degree = degree;
    b.lambdas = enumerate_block(alpha, degree);
    b.schur_basis = multipartitions_of(degree, static_cast<int>(alpha.size()));
    for (std::size_t i = 0; i < b.schur_basis.size(); ++i) b.schur_index[b.schur_basis[i]] = i;
    return b;
}

Matrix<Scalar> plethysm_matrix(int r, int degree, const Scalar& a) {
    static std::map<std::tuple<int, int, std::string>, Matrix<Scalar>> cache;
    auto key = std::make_tuple(r, degree, a.to_string());
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    auto basis = multipartitions_of(degree, r);
    Matrix<Scalar> m(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        SymFunc img = matrix_plethysm(SymFunc::schur(basis[c]), a);
        for (std::size_t row = 0; row < basis.size(); ++row) m[row][c] = img.coeff(basis[row]);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(m)).first->second;
}

SymFunc compute_H(const Partition& lambda, int r) {
    static std::map<std::pair<Partition, int>, SymFunc> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find({lambda, r}); it != cache.end()) return it->second;
    }
    const CoreQuot cq = core_quot(lambda, r);
    const int d = cq.quot.size();
    const MacdonaldBlock block = make_block(cq.charges, d);
    const Matrix<Scalar> aq = plethysm_matrix(r, d, Scalar::q());
    const Matrix<Scalar> at = plethysm_matrix(r, d, Scalar::t().inverse());

    Matrix<Scalar> constraints;
    for (const Partition& nu : block.lambdas) {
        if (nu == lambda) continue;
        const std::size_t row = block.schur_index.at(core_quot(nu, r).quot);
        if (!dominance_lt(lambda, nu)) constraints.push_back(aq[row]);
        if (!dominance_lt(nu, lambda)) constraints.push_back(at[row]);
    }
    auto ns = nullspace_fraction_free(constraints, block.schur_basis.size());
    if (ns.size() != 1) {
        throw Error("compute_H: triangularity system for " + lambda.to_string() + " has a " +
                    std::to_string(ns.size()) + "-dimensional solution space");
    }
    std::vector<Scalar> h = ns[0];
    MultiPartition row_n(r);
    if (d > 0) row_n[0] = Partition{d};
    Scalar norm = h[block.schur_index.at(row_n)];
    if (norm.is_zero()) {
        // fall back to making the s_quot coefficient of the t-image equal to 1
        std::clog << "compute_H: <s_(n)[X0], H> vanishes for " << lambda.to_string()
                  << "; normalizing by the t-plethysm image instead\n";
        const std::size_t qi = block.schur_index.at(cq.quot);
        for (std::size_t j = 0; j < h.size(); ++j) norm += at[qi][j] * h[j];
    }
    for (auto& x : h) x /= norm;
    SymFunc out = from_coords(r, block.schur_basis, h);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(std::make_pair(lambda, r), std::move(out)).first->second;
}

SymFunc compute_P(const Partition& lambda, int r, Convention convention) {
    static std::map<std::tuple<Partition, int, int>, SymFunc> cache;
    auto key = std::make_tuple(lambda, r, static_cast<int>(convention));
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymFunc out;
    if (convention == Convention::t) {
        out = compute_P(lambda, r, Convention::t_inverse).map_coeffs([](const Scalar& c) { return c.invert_t(); });
    } else {
        SymFunc h = compute_H(lambda, r);
        SymFunc img = matrix_plethysm(h, Scalar::t().inverse());
        Scalar lead = img.coeff(core_quot(lambda, r).quot);
        if (lead.is_zero()) throw Error("compute_P: s_quot coefficient vanishes for " + lambda.to_string());
        out = img * lead.inverse();
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    return cache.emplace(key, std::move(out)).first->second;
}

std::map<Partition, Scalar> pieri_expand(const Partition& lambda, int p, int n, int r) {
    if (n < 1) throw Error("pieri_expand: n must be positive");
    if (p < 0 || p >= r) throw Error("pieri_expand: color out of range");
    const CoreQuot cq = core_quot(lambda, r);
    const MacdonaldBlock block = make_block(cq.charges, cq.quot.size() + n);
    std::vector<int> ones(n, 1);
    SymFunc en = SymFunc::schur(Partition(ones), p, r);
    SymFunc target = multiply(en, compute_P(lambda, r, Convention::t));
    const std::size_t m = block.schur_basis.size();
    Matrix<Scalar> a(m, std::vector<Scalar>(m));
    for (std::size_t c = 0; c < block.lambdas.size(); ++c) {
        SymFunc pm = compute_P(block.lambdas[c], r, Convention::t);
        for (const auto& [idx, v] : pm.terms()) a[block.schur_index.at(idx)][c] = v;
    }
    std::vector<Scalar> rhs(m);
    for (const auto& [idx, v] : target.terms()) rhs[block.schur_index.at(idx)] = v;
    std::vector<Scalar> x = solve(a, rhs);
    std::map<Partition, Scalar> out;
    for (std::size_t c = 0; c < m; ++c) {
        if (!x[c].is_zero()) out.emplace(block.lambdas[c], x[c]);
    }
    return out;
}

}  // namespace wreath
