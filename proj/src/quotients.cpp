#include "wreath/quotients.hpp"

#include <algorithm>
#include <numeric>

namespace wreath {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int mod(int a, int r) {
    int v = a % r;
    return v < 0 ? v + r : v;
}

void check_r(int r) {
    if (r < 1) throw Error("r must be positive");
}

}  // namespace

EdgeSeq::EdgeSeq(int lo, const std::vector<int>& bits) {
    int hi = lo + static_cast<int>(bits.size()) - 1;
    auto at = [&](int j) { return bits[j - lo] != 0; };
    int top = hi;
    while (top >= lo && !at(top)) --top;
    int bottom = lo;
    while (bottom <= top && at(bottom)) ++bottom;
    if (bottom > top) {
        // vacuum: everything below `bottom` is 1, everything above is 0
        lo_ = bottom;
        hi_ = bottom - 1;
        return;
    }
    lo_ = bottom;
    hi_ = top;
    window_.reserve(hi_ - lo_ + 1);
    for (int j = hi_; j >= lo_; --j) window_.push_back(at(j) ? 1 : 0);
}

EdgeSeq EdgeSeq::vacuum(int charge) {
    EdgeSeq b;
    b.lo_ = charge;
    b.hi_ = charge - 1;
    return b;
}

int EdgeSeq::bit(int j) const {
    if (j > hi_) return 0;
    if (j < lo_) return 1;
    return window_[hi_ - j];
}

ChargeShape charge_shape(const EdgeSeq& b) {
    ChargeShape out;
    const int from = std::min(b.lo(), 0);
    const int to = std::max(b.hi(), -1);
    for (int j = from; j <= to; ++j) {
        if (j >= 0 && b.bit(j) == 1) ++out.charge;
        if (j < 0 && b.bit(j) == 0) --out.charge;
    }
    std::vector<int> parts;
    int ones_above = 0;
    for (int j = b.hi(); j >= b.lo(); --j) {
        if (b.bit(j) == 1) ++ones_above;
        else if (ones_above > 0) parts.push_back(ones_above);
    }
    std::reverse(parts.begin(), parts.end());
    out.shape = Partition(std::move(parts));
    return out;
}

EdgeSeq from_charge_shape(int charge, const Partition& shape) {
    if (shape.empty()) return EdgeSeq::vacuum(charge);
    const int ell = shape.length();
    const int lo = charge - shape.part(1);
    const int hi = charge + ell - 1;
    std::vector<int> bits(hi - lo + 1, 1);
    for (int b = 1; b <= ell; ++b) bits[b - 1 - shape.part(b) + charge - lo] = 0;
    return EdgeSeq(lo, bits);
}

Abacus deinterleave(const EdgeSeq& b, int r) {
    check_r(r);
    Abacus runners;
    runners.reserve(r);
    for (int i = 0; i < r; ++i) {
        const int jlo = floor_div(b.lo() - i, r) - 1;
        const int jhi = floor_div(b.hi() - i, r) + 1;
        std::vector<int> bits;
        for (int j = jlo; j <= jhi; ++j) bits.push_back(b.bit(r * j + i));
        runners.emplace_back(jlo, bits);
    }
    return runners;
}

EdgeSeq interleave(const Abacus& runners) {
    const int r = static_cast<int>(runners.size());
    check_r(r);
    int lo = 0;
    int hi = 0;
    for (int i = 0; i < r; ++i) {
        lo = std::min(lo, r * runners[i].lo() + i - r);
        hi = std::max(hi, r * runners[i].hi() + i + r);
    }
    std::vector<int> bits;
    bits.reserve(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) bits.push_back(runners[mod(j, r)].bit(floor_div(j, r)));
    return EdgeSeq(lo, bits);
}

RootVec simple_root(int i, int r) {
    check_r(r);
    RootVec a(r, 0);
    if (r == 1) return a;
    a[mod(i - 1, r)] += 1;
    a[mod(i, r)] -= 1;
    return a;
}

CoreQuot core_quot(const Partition& lambda, int r) {
    Abacus runners = deinterleave(from_charge_shape(0, lambda), r);
    CoreQuot out;
    out.quot = MultiPartition(r);
    Abacus vac;
    for (int i = 0; i < r; ++i) {
        ChargeShape cs = charge_shape(runners[i]);
        out.charges.push_back(cs.charge);
        out.quot[i] = cs.shape;
        vac.push_back(EdgeSeq::vacuum(cs.charge));
    }
    out.core = charge_shape(interleave(vac)).shape;
    return out;
}

RootVec kappa(const Partition& mu, int r) {
    std::vector<int> d = residue_counts(mu, r);
    RootVec k(r, 0);
    if (r == 1) return k;
    for (int j = 0; j < r; ++j) k[j] = d[j] - d[mod(j + 1, r)];
    return k;
}

Partition big(const RootVec& alpha, const MultiPartition& quot) {
    const int r = static_cast<int>(alpha.size());
    check_r(r);
    if (quot.r() != r) throw Error("big: quotient has the wrong number of colors");
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != 0) throw Error("big: root vector must sum to zero");
    Abacus runners;
    for (int i = 0; i < r; ++i) runners.push_back(from_charge_shape(alpha[i], quot[i]));
    return charge_shape(interleave(runners)).shape;
}

bool is_compatible(const NVec& N, const RootVec& alpha) {
    const int r = static_cast<int>(alpha.size());
    if (static_cast<int>(N.size()) != r) return false;
    for (int i = 0; i < r; ++i) {
        if (N[i] < 0) return false;
        const int im1 = mod(i - 1, r);
        if (N[i] - N[im1] != alpha[im1] - alpha[i]) return false;
    }
    return true;
}

NVec minimal_N(const RootVec& alpha) {
    if (alpha.empty()) throw Error("minimal_N: empty root vector");
    const int m = *std::max_element(alpha.begin(), alpha.end());
    NVec N;
    for (int c : alpha) N.push_back(m - c);
    return N;
}

int total(const NVec& N) { return std::accumulate(N.begin(), N.end(), 0); }

std::vector<std::pair<int, int>> spectral_vars(const Partition& lambda, const NVec& N, int p) {
    const int r = static_cast<int>(N.size());
    check_r(r);
    if (p < 0 || p >= r) throw Error("spectral_vars: color out of range");
    if (!is_compatible(N, kappa(lambda, r))) throw Error("spectral_vars: N is not compatible with kappa(lambda)");
    const int n = total(N);
    if (lambda.length() > n) throw Error("spectral_vars: partition longer than |N|");
    std::vector<std::pair<int, int>> out;
    for (int b = 1; b <= n; ++b) {
        if (mod(b - lambda.part(b) - (p + 1), r) == 0) out.emplace_back(lambda.part(b), n - b);
    }
    if (static_cast<int>(out.size()) != N[p]) throw Error("spectral_vars: count differs from N_p");
    return out;
}

std::vector<Partition> enumerate_block(const RootVec& alpha, int d) {
    const int r = static_cast<int>(alpha.size());
    std::vector<Partition> out;
    for (const auto& mp : multipartitions_of(d, r)) out.push_back(big(alpha, mp));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wreath
