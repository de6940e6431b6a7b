#include "wreath/symfunc.hpp"

#include <mutex>

namespace wreath {

namespace {

void check_same_r(const SymFunc& f, const SymFunc& g) {
    if (f.r() != g.r()) throw Error("symmetric functions with different numbers of colors");
}

Integer factorial(int n) {
    Integer f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// Murnaghan-Nakayama on beta sets: removing a k-ribbon moves a bead from x to
// x - k, with sign (-1)^(beads strictly between).
Integer mn_rec(std::vector<int>& beads, const std::vector<int>& mu, std::size_t pos,
               std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo) {
    if (pos == mu.size()) return 1;
    auto key = std::make_pair(beads, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = mu[pos];
    Integer total = 0;
    for (std::size_t idx = 0; idx < beads.size(); ++idx) {
        const int x = beads[idx];
        const int y = x - k;
        if (y < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int b : beads) {
            if (b == y) occupied = true;
            if (b > y && b < x) ++between;
        }
        if (occupied) continue;
        beads[idx] = y;
        Integer sub = mn_rec(beads, mu, pos + 1, memo);
        beads[idx] = x;
        if (between % 2) total -= sub;
        else total += sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

struct CharacterTable {
    std::vector<Partition> parts;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<Integer>> chi;  // chi[lambda][mu]
    std::vector<Integer> z;
};

const CharacterTable& table(int n) {
    static std::mutex mtx;
    static std::map<int, CharacterTable> cache;
    std::lock_guard<std::mutex> lock(mtx);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    CharacterTable t;
    t.parts = partitions_of(n);
    for (std::size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
    t.chi.assign(t.parts.size(), std::vector<Integer>(t.parts.size()));
    for (std::size_t i = 0; i < t.parts.size(); ++i) {
        for (std::size_t j = 0; j < t.parts.size(); ++j) t.chi[i][j] = character(t.parts[i], t.parts[j]);
        t.z.push_back(z_factor(t.parts[i]));
    }
    return cache.emplace(n, std::move(t)).first->second;
}

// All MultiPartitions whose component i has size sizes[i].
void for_each_shape(const std::vector<int>& sizes,
                    const std::function<void(const MultiPartition&, const std::vector<std::size_t>&)>& fn) {
    const int r = static_cast<int>(sizes.size());
    std::vector<const CharacterTable*> tabs;
    for (int s : sizes) tabs.push_back(&table(s));
    MultiPartition cur(r);
    std::vector<std::size_t> idx(r, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            fn(cur, idx);
            return;
        }
        for (std::size_t k = 0; k < tabs[i]->parts.size(); ++k) {
            cur[i] = tabs[i]->parts[k];
            idx[i] = k;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

MultiPartition union_parts(const MultiPartition& a, const MultiPartition& b) {
    MultiPartition out(a.r());
    for (int i = 0; i < a.r(); ++i) {
        std::vector<int> v = a[i].parts();
        v.insert(v.end(), b[i].parts().begin(), b[i].parts().end());
        std::sort(v.rbegin(), v.rend());
        out[i] = Partition(std::move(v));
    }
    return out;
}

}  // namespace

Integer character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw Error("character: sizes differ");
    const int ell = lambda.length();
    std::vector<int> beads;
    for (int b = 1; b <= ell; ++b) beads.push_back(lambda.part(b) + ell - b);
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    return mn_rec(beads, mu.parts(), 0, memo);
}

Integer z_factor(const Partition& mu) {
    Integer z = 1;
    std::map<int, int> mult;
    for (int k : mu.parts()) {
        ++mult[k];
        z *= k;
    }
    for (const auto& [k, m] : mult) z *= factorial(m);
    return z;
}

SymFunc SymFunc::one(int r, Basis basis) {
    SymFunc f(r, basis);
    f.terms_.emplace(MultiPartition(r), Scalar(1));
    return f;
}

SymFunc SymFunc::schur(const MultiPartition& index) {
    SymFunc f(index.r(), Basis::schur);
    f.terms_.emplace(index, Scalar(1));
    return f;
}

SymFunc SymFunc::powersum(const MultiPartition& index) {
    SymFunc f(index.r(), Basis::powersum);
    f.terms_.emplace(index, Scalar(1));
    return f;
}

SymFunc SymFunc::p(int k, int color, int r) {
    if (k < 1 || color < 0 || color >= r) throw Error("p: bad index");
    MultiPartition m(r);
    m[color] = Partition{k};
    return powersum(m);
}

SymFunc SymFunc::schur(const Partition& lambda, int color, int r) {
    if (color < 0 || color >= r) throw Error("schur: bad color");
    MultiPartition m(r);
    m[color] = lambda;
    return schur(m);
}

Scalar SymFunc::coeff(const MultiPartition& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void SymFunc::add_term(const MultiPartition& index, const Scalar& c) {
    if (index.r() != r_) throw Error("add_term: wrong number of colors");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc SymFunc::map_coeffs(const std::function<Scalar(const Scalar&)>& g) const {
    SymFunc out(r_, basis_);
    for (const auto& [m, c] : terms_) out.add_term(m, g(c));
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    check_same_r(*this, o);
    if (o.basis_ != basis_) return *this += convert(o, basis_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    check_same_r(*this, o);
    if (o.basis_ != basis_) return *this -= convert(o, basis_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (r_ != o.r_) return false;
    if (basis_ != o.basis_) return *this == convert(o, basis_);
    return terms_ == o.terms_;
}

SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc out(f.r(), target);
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> sizes;
        std::vector<std::size_t> src;
        for (int i = 0; i < m.r(); ++i) {
            sizes.push_back(m[i].size());
            src.push_back(table(m[i].size()).index.at(m[i]));
        }
        for_each_shape(sizes, [&](const MultiPartition& n, const std::vector<std::size_t>& idx) {
            // schur -> powersum: s_lambda = sum_mu chi^lambda(mu)/z_mu p_mu
            // powersum -> schur: p_mu = sum_lambda chi^lambda(mu) s_lambda
            Rational w = 1;
            for (int i = 0; i < m.r(); ++i) {
                const CharacterTable& t = table(sizes[i]);
                if (target == Basis::powersum) {
                    w *= Rational(t.chi[src[i]][idx[i]]) / t.z[idx[i]];
                } else {
                    w *= t.chi[idx[i]][src[i]];
                }
                if (w == 0) return;
            }
            out.add_term(n, c * Scalar(w));
        });
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    check_same_r(f, g);
    SymFunc a = convert(f, Basis::powersum);
    SymFunc b = convert(g, Basis::powersum);
    SymFunc out(f.r(), Basis::powersum);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) out.add_term(union_parts(ma, mb), ca * cb);
    }
    return convert(out, f.basis());
}

Scalar hall_pairing(const SymFunc& f, const SymFunc& g) {
    check_same_r(f, g);
    Scalar s;
    if (f.basis() == Basis::schur) {
        SymFunc b = convert(g, Basis::schur);
        for (const auto& [m, c] : f.terms()) {
            auto it = b.terms().find(m);
            if (it != b.terms().end()) s += c * it->second;
        }
        return s;
    }
    SymFunc b = convert(g, Basis::powersum);
    for (const auto& [m, c] : f.terms()) {
        auto it = b.terms().find(m);
        if (it == b.terms().end()) continue;
        Integer z = 1;
        for (int i = 0; i < m.r(); ++i) z *= z_factor(m[i]);
        s += c * it->second * Scalar(Rational(z));
    }
    return s;
}

SymFunc linear_color_substitution(const SymFunc& f,
                                  const std::function<std::vector<Scalar>(int, int)>& image) {
    const int r = f.r();
    SymFunc pf = convert(f, Basis::powersum);
    std::map<std::pair<int, int>, std::vector<Scalar>> cache;
    auto img = [&](int k, int i) -> const std::vector<Scalar>& {
        auto key = std::make_pair(k, i);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, image(k, i)).first;
        return it->second;
    };
    SymFunc out(r, Basis::powersum);
    for (const auto& [m, c] : pf.terms()) {
        // expand the product factor by factor
        std::map<MultiPartition, Scalar> acc{{MultiPartition(r), c}};
        for (int i = 0; i < r; ++i) {
            for (int k : m[i].parts()) {
                const auto& coeffs = img(k, i);
                std::map<MultiPartition, Scalar> next;
                for (const auto& [mm, cc] : acc) {
                    for (int j = 0; j < r; ++j) {
                        if (coeffs[j].is_zero()) continue;
                        MultiPartition single(r);
                        single[j] = Partition{k};
                        MultiPartition key = union_parts(mm, single);
                        Scalar v = cc * coeffs[j];
                        auto [it, ins] = next.emplace(key, v);
                        if (!ins) it->second += v;
                    }
                }
                acc = std::move(next);
            }
        }
        for (const auto& [mm, cc] : acc) out.add_term(mm, cc);
    }
    return convert(out, f.basis());
}

SymFunc matrix_plethysm(const SymFunc& f, const Scalar& a) {
    const int r = f.r();
    return linear_color_substitution(f, [&](int k, int i) {
        std::vector<Scalar> v(r);
        v[i] += Scalar(1);
        v[(i - 1 + r) % r] -= a.pow(k);
        return v;
    });
}

SymFunc matrix_plethysm_inverse(const SymFunc& f, const Scalar& a) {
    const int r = f.r();
    return linear_color_substitution(f, [&](int k, int i) {
        std::vector<Scalar> v(r);
        const Scalar ak = a.pow(k);
        const Scalar scale = (Scalar(1) - ak.pow(r)).inverse();
        Scalar w = scale;
        for (int m = 0; m < r; ++m) {
            v[((i - m) % r + r) % r] += w;
            w *= ak;
        }
        return v;
    });
}

}  // namespace wreath
