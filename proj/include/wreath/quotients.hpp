#pragma once

// Edge sequences, abaci, r-cores and r-quotients, the kappa map, `big`, and
// the bookkeeping that ties a partition to its variable counts N.

#include <utility>
#include <vector>

#include "wreath/partitions.hpp"

namespace wreath {

/// Bi-infinite 0/1 word with b(j) = 1 for j < lo and b(j) = 0 for j > hi.
/// Canonical: either b(hi) = 1 and b(lo) = 0, or the window is empty and
/// lo = c, hi = c - 1 for the vacuum sequence of charge c.
class EdgeSeq {
public:
    EdgeSeq() = default;
    /// bits[k] is b(lo + k); the result is trimmed to canonical form.
    EdgeSeq(int lo, const std::vector<int>& bits);
    static EdgeSeq vacuum(int charge);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int bit(int j) const;

    bool operator==(const EdgeSeq&) const = default;

private:
    int lo_ = 0;
    int hi_ = -1;
    std::vector<unsigned char> window_;  // high index first: window_[hi - j]
};

struct ChargeShape {
    int charge = 0;
    Partition shape;
};

ChargeShape charge_shape(const EdgeSeq& b);
EdgeSeq from_charge_shape(int charge, const Partition& shape);

using Abacus = std::vector<EdgeSeq>;

Abacus deinterleave(const EdgeSeq& b, int r);
EdgeSeq interleave(const Abacus& runners);

/// Element of the root lattice {c in Z^r : sum c_i = 0}.
using RootVec = std::vector<int>;
using NVec = std::vector<int>;

/// alpha_i = eps_{i-1} - eps_i (indices mod r).
RootVec simple_root(int i, int r);

struct CoreQuot {
    Partition core;
    MultiPartition quot;
    RootVec charges;
};

CoreQuot core_quot(const Partition& lambda, int r);

/// -sum over cells of alpha_{residue}.
RootVec kappa(const Partition& mu, int r);

/// The partition with runner charges alpha and runner shapes quot.
Partition big(const RootVec& alpha, const MultiPartition& quot);

bool is_compatible(const NVec& N, const RootVec& alpha);
NVec minimal_N(const RootVec& alpha);
int total(const NVec& N);

/// Exponent pairs (lambda_b, |N| - b) over rows b = 1..|N| with
/// b - lambda_b = p + 1 mod r.
std::vector<std::pair<int, int>> spectral_vars(const Partition& lambda, const NVec& N, int p);

/// All lambda with kappa(lambda) = alpha and |quot(lambda)| = d, sorted
/// lexicographically (smallest first, so dominated partitions come first).
std::vector<Partition> enumerate_block(const RootVec& alpha, int d);

}  // namespace wreath
