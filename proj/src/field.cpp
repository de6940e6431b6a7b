#include "wreath/field.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>
#include <utility>

namespace wreath {

namespace {

// Graded lexicographic, descending: higher total degree first, then higher q.
bool term_before(const BiPoly::Term& a, const BiPoly::Term& b) {
    const int da = a.q + a.t;
    const int db = b.q + b.t;
    if (da != db) return da > db;
    return a.q > b.q;
}

bool same_exponents(const BiPoly::Term& a, const BiPoly::Term& b) {
    return a.q == b.q && a.t == b.t;
}

// ---------------------------------------------------------------------------
// Integer polynomial machinery used only by gcd().

using ZPoly = std::vector<Integer>;  // dense, index = degree, no trailing zeros

void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly primitive(ZPoly a) {
    trim(a);
    if (a.empty()) return a;
    Integer g = content(a);
    if (a.back() < 0) g = -g;
    if (g != 1) {
        for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
    return a;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

// a*x - b*y, the workhorse of pseudo-division.
ZPoly zcombine(const ZPoly& a, const Integer& x, const ZPoly& b, const Integer& y, int shift) {
    ZPoly r(std::max(a.size(), b.size() + shift), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * x;
    for (std::size_t j = 0; j < b.size(); ++j) {
        mpz_submul(r[j + shift].get_mpz_t(), b[j].get_mpz_t(), y.get_mpz_t());
    }
    trim(r);
    return r;
}

ZPoly zprem(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        Integer la = a.back();
        a = zcombine(a, lb, b, la, deg(a) - deg(b));
    }
    return a;
}

// Primitive part of the gcd in Z[x] (content is not tracked; callers only
// need the gcd up to a unit of Q).
ZPoly zgcd(ZPoly a, ZPoly b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (deg(a) < deg(b)) std::swap(a, b);
    while (!b.empty()) {
        if (deg(b) == 0) return ZPoly{1};
        ZPoly r = primitive(zprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact division in Z[x]; returns false when b does not divide a.
bool zdivexact(ZPoly a, const ZPoly& b, ZPoly& out) {
    trim(a);
    if (a.empty()) {
        out.clear();
        return true;
    }
    if (deg(a) < deg(b)) return false;
    out.assign(a.size() - b.size() + 1, 0);
    const Integer& lb = b.back();
    for (int k = deg(a) - deg(b); k >= 0; --k) {
        Integer& lead = a[k + deg(b)];
        if (lead == 0) continue;
        if (!mpz_divisible_p(lead.get_mpz_t(), lb.get_mpz_t())) return false;
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), lead.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_submul(a[j + k].get_mpz_t(), qk.get_mpz_t(), b[j].get_mpz_t());
        }
        out[k] = qk;
    }
    trim(a);
    trim(out);
    return a.empty();
}

// Polynomials in y with coefficients in Z[x].
using RPoly = std::vector<ZPoly>;

void rtrim(RPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

ZPoly rcontent(const RPoly& a) {
    ZPoly g;
    for (const auto& c : a) {
        if (c.empty()) continue;
        g = zgcd(g, c);
        if (deg(g) == 0) return ZPoly{1};
    }
    return g;
}

RPoly rdivide_content(const RPoly& a, const ZPoly& c) {
    RPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].empty()) continue;
        [[maybe_unused]] bool ok = zdivexact(a[i], c, r[i]);
        assert(ok);
    }
    return r;
}

RPoly rprimitive(RPoly a) {
    rtrim(a);
    if (a.empty()) return a;
    ZPoly c = rcontent(a);
    RPoly r = (deg(c) == 0 && c[0] == 1) ? a : rdivide_content(a, c);
    // integer content and sign
    Integer g = 0;
    for (const auto& zc : r) {
        for (const auto& x : zc) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (r.back().back() < 0) g = -g;
    if (g != 1) {
        for (auto& zc : r) {
            for (auto& x : zc) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
    return r;
}

RPoly rprem(RPoly a, const RPoly& b) {
    const ZPoly& lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        ZPoly la = a.back();
        RPoly r(std::max(a.size(), b.size() + shift));
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = zmul(a[i], lb);
        for (std::size_t j = 0; j < b.size(); ++j) {
            ZPoly prod = zmul(b[j], la);
            ZPoly& dst = r[j + shift];
            if (dst.size() < prod.size()) dst.resize(prod.size(), 0);
            for (std::size_t k = 0; k < prod.size(); ++k) dst[k] -= prod[k];
            trim(dst);
        }
        rtrim(r);
        a = std::move(r);
    }
    return a;
}

RPoly rgcd(RPoly a, RPoly b) {
    rtrim(a);
    rtrim(b);
    if (a.size() == 1 || b.size() == 1) {
        ZPoly ca = a.size() == 1 ? primitive(a[0]) : rcontent(a);
        ZPoly cb = b.size() == 1 ? primitive(b[0]) : rcontent(b);
        return RPoly{zgcd(ca, cb)};
    }
    ZPoly c = zgcd(rcontent(a), rcontent(b));
    a = rprimitive(std::move(a));
    b = rprimitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        if (b.size() == 1) {
            a = RPoly{ZPoly{1}};
            break;
        }
        RPoly r = rprimitive(rprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& zc : a) zc = zmul(zc, c);
    return a;
}

// ---------------------------------------------------------------------------
// Modular screening: random univariate images over F_p, p = 2^61 - 1.

using u64 = std::uint64_t;
using u128 = unsigned __int128;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mulmod(u64 a, u64 b) {
    u128 z = static_cast<u128>(a) * b;
    u64 lo = static_cast<u64>(z & kPrime);
    u64 hi = static_cast<u64>(z >> 61);
    u64 s = lo + hi;
    if (s >= kPrime) s -= kPrime;
    return s;
}
u64 addmod(u64 a, u64 b) {
    u64 s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
u64 submod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }
u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
u64 invmod(u64 a) { return powmod(a, kPrime - 2); }
u64 reduce_mod(const Integer& c) {
    u64 r = mpz_fdiv_ui(c.get_mpz_t(), kPrime);
    return r;
}

using PPoly = std::vector<u64>;
void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
int pgcd_degree(PPoly a, PPoly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        const u64 inv = invmod(b.back());
        while (a.size() >= b.size()) {
            const u64 f = mulmod(a.back(), inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[j + shift] = submod(a[j + shift], mulmod(f, b[j]));
            }
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

struct ZTerm {
    int x;
    int y;
    Integer c;
};

// Image in F_p[y] after x -> x0; also reports whether the y-degree survived.
PPoly image_in_y(const std::vector<ZTerm>& a, u64 x0, int deg_y, bool& degree_kept) {
    PPoly r(deg_y + 1, 0);
    for (const auto& term : a) {
        r[term.y] = addmod(r[term.y], mulmod(reduce_mod(term.c), powmod(x0, term.x)));
    }
    degree_kept = r[deg_y] != 0;
    return r;
}

std::vector<ZTerm> integer_terms(const BiPoly& p, bool swap_vars) {
    Integer l = 1;
    for (const auto& term : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), term.c.get_den_mpz_t());
    }
    std::vector<ZTerm> out;
    out.reserve(p.terms().size());
    for (const auto& term : p.terms()) {
        Integer c = term.c.get_num() * (l / term.c.get_den());
        if (swap_vars) out.push_back({term.t, term.q, c});
        else out.push_back({term.q, term.t, c});
    }
    return out;
}

int max_y(const std::vector<ZTerm>& a) {
    int d = 0;
    for (const auto& term : a) d = std::max(d, term.y);
    return d;
}

// True when the gcd of a and b provably has degree zero in y.
bool coprime_in_y(const std::vector<ZTerm>& a, const std::vector<ZTerm>& b, u64 seed) {
    const int da = max_y(a);
    const int db = max_y(b);
    if (da == 0 || db == 0) return true;
    u64 x0 = 0x9e3779b97f4a7c15ULL ^ seed;
    for (int attempt = 0; attempt < 3; ++attempt) {
        x0 = (x0 * 6364136223846793005ULL + 1442695040888963407ULL) % kPrime;
        bool ka = false;
        bool kb = false;
        PPoly ia = image_in_y(a, x0, da, ka);
        PPoly ib = image_in_y(b, x0, db, kb);
        if (!ka || !kb) continue;
        return pgcd_degree(ia, ib) == 0;
    }
    return false;
}

RPoly to_recursive(const std::vector<ZTerm>& a) {
    RPoly r(max_y(a) + 1);
    for (const auto& term : a) {
        ZPoly& c = r[term.y];
        if (static_cast<int>(c.size()) <= term.x) c.resize(term.x + 1, 0);
        c[term.x] += term.c;
    }
    for (auto& c : r) trim(c);
    rtrim(r);
    return r;
}

BiPoly from_recursive(const RPoly& r, bool swap_vars) {
    std::vector<BiPoly::Term> terms;
    for (std::size_t y = 0; y < r.size(); ++y) {
        for (std::size_t x = 0; x < r[y].size(); ++x) {
            if (r[y][x] == 0) continue;
            const int xi = static_cast<int>(x);
            const int yi = static_cast<int>(y);
            if (swap_vars) terms.push_back({yi, xi, Rational(r[y][x])});
            else terms.push_back({xi, yi, Rational(r[y][x])});
        }
    }
    return BiPoly::from_terms(std::move(terms));
}

BiPoly make_monic(BiPoly p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.leading().c;
    return p * inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(long c) {
    if (c != 0) terms_.push_back({0, 0, Rational(c)});
}

BiPoly::BiPoly(const Rational& c) {
    if (c != 0) {
        terms_.push_back({0, 0, c});
        terms_.back().c.canonicalize();
    }
}

BiPoly BiPoly::monomial(int q_exp, int t_exp, const Rational& c) {
    if (q_exp < 0 || t_exp < 0) throw Error("BiPoly exponents must be nonnegative");
    BiPoly p;
    if (c != 0) {
        p.terms_.push_back({q_exp, t_exp, c});
        p.terms_.back().c.canonicalize();
    }
    return p;
}

BiPoly BiPoly::q() { return monomial(1, 0); }
BiPoly BiPoly::t() { return monomial(0, 1); }

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
    for (auto& term : terms) term.c.canonicalize();
    std::sort(terms.begin(), terms.end(), term_before);
    BiPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && same_exponents(p.terms_.back(), term)) {
            p.terms_.back().c += term.c;
            if (p.terms_.back().c == 0) p.terms_.pop_back();
        } else if (term.c != 0) {
            p.terms_.push_back(std::move(term));
        }
    }
    return p;
}

bool BiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0);
}

Rational BiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().q == 0 && terms_.back().t == 0) return terms_.back().c;
    return 0;
}

int BiPoly::degree_q() const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.q);
    return d;
}

int BiPoly::degree_t() const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.t);
    return d;
}

int BiPoly::min_degree_q() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].q;
    for (const auto& term : terms_) d = std::min(d, term.q);
    return d;
}

int BiPoly::min_degree_t() const {
    if (terms_.empty()) return 0;
    int d = terms_[0].t;
    for (const auto& term : terms_) d = std::min(d, term.t);
    return d;
}

int BiPoly::total_degree() const { return terms_.empty() ? 0 : terms_[0].q + terms_[0].t; }

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& term : r.terms_) term.c = -term.c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && term_before(terms_[i], o.terms_[j]))) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || term_before(o.terms_[j], terms_[i])) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (c != 0) merged.push_back({terms_[i].q, terms_[i].t, std::move(c)});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& term : terms_) term.c *= c;
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    *this = *this * o;
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) {
        BiPoly r = a;
        const auto& m = b.terms_[0];
        for (auto& term : r.terms_) {
            term.q += m.q;
            term.t += m.t;
            term.c *= m.c;
        }
        return r;
    }
    if (a.is_monomial()) return b * a;
    std::vector<BiPoly::Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) prod.push_back({x.q + y.q, x.t + y.t, x.c * y.c});
    }
    return BiPoly::from_terms(std::move(prod));
}

BiPoly BiPoly::shifted(int dq, int dt) const {
    BiPoly r = *this;
    for (auto& term : r.terms_) {
        term.q += dq;
        term.t += dt;
        if (term.q < 0 || term.t < 0) throw Error("BiPoly shift produced a negative exponent");
    }
    return r;
}

BiPoly BiPoly::reversed_t(int deg_t) const {
    std::vector<Term> terms = terms_;
    for (auto& term : terms) {
        term.t = deg_t - term.t;
        if (term.t < 0) throw Error("reversed_t: degree too small");
    }
    return from_terms(std::move(terms));
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly result(1);
    BiPoly base = *this;
    while (n) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

BiPoly BiPoly::divexact(const BiPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (d.is_constant()) return *this * (1 / d.leading().c);
    BiPoly rem = *this;
    std::vector<Term> quot;
    const Term& ld = d.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (lr.q < ld.q || lr.t < ld.t) throw Error("BiPoly::divexact: not divisible");
        BiPoly m = monomial(lr.q - ld.q, lr.t - ld.t, lr.c / ld.c);
        quot.push_back(m.terms_[0]);
        rem -= m * d;
    }
    return from_terms(std::move(quot));
}

Rational BiPoly::evaluate(const Rational& q0, const Rational& t0) const {
    const int dq = degree_q();
    const int dt = degree_t();
    std::vector<Rational> qp(dq + 1);
    std::vector<Rational> tp(dt + 1);
    Rational qc = q0;
    Rational tc = t0;
    qc.canonicalize();
    tc.canonicalize();
    qp[0] = 1;
    tp[0] = 1;
    for (int i = 1; i <= dq; ++i) qp[i] = qp[i - 1] * qc;
    for (int i = 1; i <= dt; ++i) tp[i] = tp[i - 1] * tc;
    Rational s = 0;
    for (const auto& term : terms_) s += term.c * qp[term.q] * tp[term.t];
    return s;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->c;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        const bool unit = c == 1;
        const bool pure = it->q == 0 && it->t == 0;
        if (!unit || pure) {
            os << wreath::to_string(c);
            if (!pure) os << "*";
        }
        bool wrote = false;
        if (it->q > 0) {
            os << "q";
            if (it->q > 1) os << "^" << it->q;
            wrote = true;
        }
        if (it->t > 0) {
            if (wrote) os << "*";
            os << "t";
            if (it->t > 1) os << "^" << it->t;
        }
    }
    return os.str();
}

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return BiPoly(1);

    const int mq = std::min(a.min_degree_q(), b.min_degree_q());
    const int mt = std::min(a.min_degree_t(), b.min_degree_t());
    const BiPoly mono = BiPoly::monomial(mq, mt);
    const BiPoly ar = a.shifted(-a.min_degree_q(), -a.min_degree_t());
    const BiPoly br = b.shifted(-b.min_degree_q(), -b.min_degree_t());
    if (ar.is_constant() || br.is_constant()) return mono;

    const bool swap_vars =
        std::max(ar.degree_t(), br.degree_t()) > std::max(ar.degree_q(), br.degree_q());
    // main variable y: t unless swapped (then q)
    auto za = integer_terms(ar, swap_vars);
    auto zb = integer_terms(br, swap_vars);
    const u64 seed = static_cast<u64>(ar.terms().size() * 131 + br.terms().size());
    if (coprime_in_y(za, zb, seed)) {
        // gcd lies in Z[x]; check the other variable the same way
        auto sa = integer_terms(ar, !swap_vars);
        auto sb = integer_terms(br, !swap_vars);
        if (coprime_in_y(sa, sb, seed + 7)) return mono;
    }
    RPoly g = rgcd(to_recursive(za), to_recursive(zb));
    return make_monic(from_recursive(g, swap_vars) * mono);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        BiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    const Rational lc = den_.leading().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

Scalar Scalar::monomial(int a, int b, const Rational& c) {
    Scalar s;
    s.num_ = BiPoly::monomial(std::max(a, 0), std::max(b, 0), c);
    s.den_ = BiPoly::monomial(std::max(-a, 0), std::max(-b, 0));
    if (s.num_.is_zero()) s.den_ = BiPoly(1);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant()) reduce();
        else if (num_.is_zero()) den_ = BiPoly(1);
        return *this;
    }
    BiPoly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = BiPoly(1);
        else {
            const Rational lc = den_.leading().c;
            if (lc != 1) {
                Rational inv = 1 / lc;
                num_ *= inv;
                den_ *= inv;
            }
        }
        return *this;
    }
    BiPoly b1 = den_.divexact(g);
    BiPoly d1 = o.den_.divexact(g);
    BiPoly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        num_ = BiPoly();
        den_ = BiPoly(1);
        return *this;
    }
    BiPoly g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = n.divexact(g2);
        g = g.divexact(g2);
    }
    num_ = std::move(n);
    den_ = b1 * d1 * g;
    const Rational lc = den_.leading().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_zero() || o.is_zero()) return *this = Scalar();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    BiPoly a = num_;
    BiPoly b = den_;
    BiPoly c = o.num_;
    BiPoly d = o.den_;
    BiPoly g1 = gcd(a, d);
    if (!g1.is_constant()) {
        a = a.divexact(g1);
        d = d.divexact(g1);
    }
    BiPoly g2 = gcd(c, b);
    if (!g2.is_constant()) {
        c = c.divexact(g2);
        b = b.divexact(g2);
    }
    num_ = a * c;
    den_ = b * d;
    const Rational lc = den_.leading().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    const Rational lc = r.den_.leading().c;
    if (lc != 1) {
        Rational inv = 1 / lc;
        r.num_ *= inv;
        r.den_ *= inv;
    }
    return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    return *this *= o.inverse();
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    Scalar result(1);
    Scalar base = *this;
    unsigned e = static_cast<unsigned>(n);
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

Scalar Scalar::invert_t() const {
    const int dn = num_.degree_t();
    const int dd = den_.degree_t();
    BiPoly n = num_.reversed_t(dn).shifted(0, dd);
    BiPoly d = den_.reversed_t(dd).shifted(0, dn);
    return Scalar(std::move(n), std::move(d));
}

Scalar Scalar::invert_qt() const {
    auto flip = [](const BiPoly& p, int dq, int dt) {
        std::vector<BiPoly::Term> terms = p.terms();
        for (auto& term : terms) {
            term.q = dq - term.q;
            term.t = dt - term.t;
        }
        return BiPoly::from_terms(std::move(terms));
    };
    const int nq = num_.degree_q();
    const int nt = num_.degree_t();
    const int dq = den_.degree_q();
    const int dt = den_.degree_t();
    BiPoly n = flip(num_, nq, nt).shifted(dq, dt);
    BiPoly d = flip(den_, dq, dt).shifted(nq, nt);
    return Scalar(std::move(n), std::move(d));
}

Rational Scalar::evaluate(const Rational& q0, const Rational& t0) const {
    Rational d = den_.evaluate(q0, t0);
    if (d == 0) throw PoleError();
    return num_.evaluate(q0, t0) / d;
}

std::string Scalar::to_string() const {
    if (den_ == BiPoly(1)) return num_.to_string();
    auto wrap = [](const BiPoly& p) {
        std::string s = p.to_string();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

Scalar invert_t(const Scalar& a) { return a.invert_t(); }

Scalar arithmetic(const Scalar& a, const Scalar& b, Op op) {
    switch (op) {
        case Op::add: return a + b;
        case Op::sub: return a - b;
        case Op::mul: return a * b;
        case Op::div: return a / b;
    }
    throw Error("unknown op");
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) throw Error("malformed rational: '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator in rational: '" + s + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace wreath
