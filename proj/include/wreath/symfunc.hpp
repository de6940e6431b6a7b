#pragma once

// The r-colored ring of symmetric functions over Q(q,t) with tensor Schur and
// colored power-sum bases.  Both bases are indexed by MultiPartitions: in the
// power-sum basis component i lists the k's of the factors p_k[X^(i)].

#include <functional>
#include <map>
#include <vector>

#include "wreath/field.hpp"
#include "wreath/partitions.hpp"

namespace wreath {

enum class Basis { schur, powersum };

class SymFunc {
public:
    using Terms = std::map<MultiPartition, Scalar>;

    SymFunc() = default;
    SymFunc(int r, Basis basis) : r_(r), basis_(basis) {}

    static SymFunc one(int r, Basis basis = Basis::schur);
    static SymFunc schur(const MultiPartition& index);
    static SymFunc powersum(const MultiPartition& index);
    /// p_k[X^(color)].
    static SymFunc p(int k, int color, int r);
    /// f[X^(color)] for a single-color Schur function s_lambda.
    static SymFunc schur(const Partition& lambda, int color, int r);

    int r() const { return r_; }
    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const MultiPartition& index) const;
    /// Adds c to the coefficient of index, dropping it if it cancels.
    void add_term(const MultiPartition& index, const Scalar& c);

    /// Applies g to every coefficient (zeros are dropped).
    SymFunc map_coeffs(const std::function<Scalar(const Scalar&)>& g) const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const Scalar& c);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Scalar& c) { return a *= c; }
    friend SymFunc operator*(const Scalar& c, SymFunc a) { return a *= c; }

    /// Equality as elements of the ring (bases may differ).
    bool operator==(const SymFunc& o) const;

private:
    int r_ = 1;
    Basis basis_ = Basis::schur;
    Terms terms_;
};

/// chi^lambda(mu) by Murnaghan-Nakayama; |lambda| = |mu|.
Integer character(const Partition& lambda, const Partition& mu);
/// n! / (size of the conjugacy class of cycle type mu).
Integer z_factor(const Partition& mu);

SymFunc convert(const SymFunc& f, Basis target);
SymFunc multiply(const SymFunc& f, const SymFunc& g);
Scalar hall_pairing(const SymFunc& f, const SymFunc& g);

/// The algebra automorphism p_k[X^(i)] -> p_k[X^(i)] - a^k p_k[X^(i-1)].
/// The result is in the basis of f.
SymFunc matrix_plethysm(const SymFunc& f, const Scalar& a);
/// Its inverse, p_k[X^(i)] -> (1 - a^{kr})^{-1} sum_m a^{km} p_k[X^(i-m)].
SymFunc matrix_plethysm_inverse(const SymFunc& f, const Scalar& a);

/// Algebra map sending p_k[X^(i)] to sum_j image(k, i)[j] p_k[X^(j)].
SymFunc linear_color_substitution(const SymFunc& f,
                                  const std::function<std::vector<Scalar>(int k, int i)>& image);

}  // namespace wreath
