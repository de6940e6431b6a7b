#pragma once

// Randomized exact verification suites shared by the command line tool and
// the acceptance tests.  Every suite is deterministic given its seed.

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/eigen.hpp"
#include "wreath/io.hpp"

namespace wreath {

struct Sample {
    std::string label;
    Scalar lhs;
    Scalar rhs;
    bool equal = false;
};

struct SuiteReport {
    std::vector<Sample> samples;
    int cases = 0;

    bool passed() const;
    Json to_json() const;
};

/// minimal_N(alpha) shifted up until every color has at least `at_least` variables.
NVec lift_N(const RootVec& alpha, int at_least);

struct EigenSuite {
    RootVec alpha;
    int degree = 0;
    int n = 1;
    std::vector<DKind> kinds{DKind::D};
    std::vector<NVec> Ns;  // empty: lift_N(alpha, n)
    int symbolic_samples = 0;
    int rational_samples = 5;
    std::uint64_t seed = 1;
    Convention convention = Convention::t;
    int height = 50;
};

SuiteReport verify_eigen(const EigenSuite& suite);

struct NSSuite {
    RootVec alpha;
    int degree = 0;
    std::vector<NSKind> kinds{NSKind::H, NSKind::Hstar};
    std::vector<NVec> Ns;  // empty: lift_N(alpha, 1)
    int symbolic_samples = 1;
    int rational_samples = 2;
    bool series_oracle = true;
    std::uint64_t seed = 1;
    Convention convention = Convention::t;
    int height = 50;
};

SuiteReport verify_ns(const NSSuite& suite);

struct BijectionReport {
    long checked = 0;
    std::vector<std::string> failures;
    Json to_json() const;
};

/// core/quotient round trips, abacus core against ribbon stripping, and
/// charge and size bookkeeping for every |lambda| <= max_size.
BijectionReport verify_bijections(int max_size, const std::vector<int>& rs);

struct ShiftCase {
    int r = 0;
    NVec N;
    Partition lambda;
    Partition shifted;  // lambda with r columns added to its first |N| rows
};

/// The first `count` cases in order of increasing target quotient degree,
/// restricted to targets of degree at most `max_degree`.
std::vector<ShiftCase> shift_cases(int r, int count, int max_degree);

/// (product of all variables) * P_lambda = P_shifted at random points.
SuiteReport verify_shift(const std::vector<ShiftCase>& cases, int samples, std::uint64_t seed);

struct PieriReport {
    long terms = 0;
    std::vector<std::string> failures;
    Json to_json() const;
};

/// Support of e_1[X^(p)] P_core in the P basis for every r-core with at most
/// `max_core_size` boxes and every p: one new box of each color, and no
/// horizontally adjacent new boxes of colors p and p+1 in either order.
PieriReport verify_pieri(int r, int max_core_size);

struct BasisReport {
    std::size_t size = 0;
    std::size_t rank = 0;
    NVec N;
    Json to_json() const;
};

/// Rank of [P_lambda(x_j)] over a block at one random (q, t) and
/// block-size many random points, with N large enough for every member.
BasisReport verify_basis(const RootVec& alpha, int degree, std::uint64_t seed);

}  // namespace wreath
