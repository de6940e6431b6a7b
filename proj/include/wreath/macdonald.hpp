#pragma once

// Wreath Macdonald functions H_lambda and polynomials P_lambda from the two
// plethystic triangularity conditions, and Pieri expansions in the P basis.

#include <map>
#include <vector>

#include "wreath/quotients.hpp"
#include "wreath/linalg.hpp"
#include "wreath/symfunc.hpp"

namespace wreath {

/// t_inverse: P_lambda[X; q, 1/t], the form produced directly by the solve.
/// t: P_lambda[X; q, t], obtained by inverting t in every coefficient.
enum class Convention { t, t_inverse };

struct MacdonaldBlock {
    RootVec alpha;
    int degree = 0;
    std::vector<Partition> lambdas;  // enumerate_block order
    std::vector<MultiPartition> schur_basis;
    std::map<MultiPartition, std::size_t> schur_index;
};

MacdonaldBlock make_block(const RootVec& alpha, int degree);

/// Matrix of f -> matrix_plethysm(f, a) on degree-d tensor Schur functions:
/// entry [row][col] is the coefficient of s_row in the image of s_col.
Matrix<Scalar> plethysm_matrix(int r, int degree, const Scalar& a);

SymFunc compute_H(const Partition& lambda, int r);
SymFunc compute_P(const Partition& lambda, int r, Convention convention);

/// e_n[X^(p)] * P_lambda = sum_mu c_mu P_mu (convention t); zero coefficients omitted.
std::map<Partition, Scalar> pieri_expand(const Partition& lambda, int p, int n, int r);

}  // namespace wreath
