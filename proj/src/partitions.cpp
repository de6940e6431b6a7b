#include "wreath/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace wreath {

int residue(Cell c, int r) {
    if (r < 1) throw Error("residue: r must be positive");
    int v = (c.row - c.col) % r;
    return v < 0 ? v + r : v;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing: " + to_string());
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++t[j];
    }
    return Partition(std::move(t));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int b = 0; b < length(); ++b) {
        for (int a = 0; a < parts_[b]; ++a) out.push_back({a, b});
    }
    return out;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int b = 1; b <= inner.length(); ++b) {
        if (inner.part(b) > part(b)) return false;
    }
    return true;
}

int Partition::hook_length(Cell c) const {
    if (!contains(c)) throw Error("hook_length: cell outside the diagram");
    const int arm = part(c.row + 1) - c.col - 1;
    int leg = 0;
    while (part(c.row + leg + 2) > c.col) ++leg;
    return arm + leg + 1;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ']';
    return os.str();
}

int MultiPartition::size() const {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

std::string MultiPartition::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) s += (i ? "," : "") + comps_[i].to_string();
    return s + "]";
}

std::vector<int> residue_counts(const Partition& lambda, int r) {
    std::vector<int> d(r, 0);
    for (const Cell& c : lambda.cells()) ++d[residue(c, r)];
    return d;
}

bool dominance_lt(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw Error("dominance_lt: sizes differ");
    if (lambda == mu) return false;
    int sl = 0;
    int sm = 0;
    const int n = std::max(lambda.length(), mu.length());
    for (int b = 1; b <= n; ++b) {
        sl += lambda.part(b);
        sm += mu.part(b);
        if (sl > sm) return false;
    }
    return true;
}

Partition add_rectangle(const Partition& lambda, int rows, int cols) {
    if (rows < 0 || cols < 0) throw Error("add_rectangle: negative dimensions");
    if (lambda.length() > rows) throw Error("add_rectangle: partition longer than the rectangle");
    std::vector<int> parts(rows);
    for (int b = 1; b <= rows; ++b) parts[b - 1] = lambda.part(b) + cols;
    return Partition(std::move(parts));
}

bool is_ribbon(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner) || outer.size() == inner.size()) return false;
    std::vector<Cell> skew;
    for (const Cell& c : outer.cells()) {
        if (!inner.contains(c)) skew.push_back(c);
    }
    std::vector<int> diagonals;
    for (const Cell& c : skew) diagonals.push_back(c.row - c.col);
    std::sort(diagonals.begin(), diagonals.end());
    if (std::adjacent_find(diagonals.begin(), diagonals.end()) != diagonals.end()) return false;
    // rookwise connectivity by flood fill
    std::vector<bool> seen(skew.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Cell c = skew[stack.back()];
        stack.pop_back();
        for (std::size_t k = 0; k < skew.size(); ++k) {
            if (seen[k]) continue;
            const int dist = std::abs(skew[k].row - c.row) + std::abs(skew[k].col - c.col);
            if (dist == 1) {
                seen[k] = true;
                ++reached;
                stack.push_back(k);
            }
        }
    }
    return reached == skew.size();
}

namespace {

// Removes the rim hook of the cell (a, b); the hook length must equal r.
Partition remove_rim_hook(const Partition& lambda, Cell c) {
    std::vector<int> parts = lambda.parts();
    int leg = 0;
    while (lambda.part(c.row + leg + 2) > c.col) ++leg;
    for (int k = c.row; k < c.row + leg; ++k) parts[k] = parts[k + 1] - 1;
    parts[c.row + leg] = c.col;
    return Partition(std::move(parts));
}

}  // namespace

bool is_core(const Partition& lambda, int r) {
    for (const Cell& c : lambda.cells()) {
        if (lambda.hook_length(c) == r) return false;
    }
    return true;
}

Partition strip_ribbon_core(const Partition& lambda, int r) {
    if (r < 1) throw Error("strip_ribbon_core: r must be positive");
    Partition cur = lambda;
    while (true) {
        bool found = false;
        Cell best;
        for (const Cell& c : cur.cells()) {
            if (cur.hook_length(c) == r && (!found || c.row > best.row)) {
                best = c;
                found = true;
            }
        }
        if (!found) return cur;
        Partition next = remove_rim_hook(cur, best);
        if (!is_ribbon(cur, next)) throw Error("strip_ribbon_core: removed cells do not form a ribbon");
        cur = std::move(next);
    }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<MultiPartition> multipartitions_of(int n, int r) {
    std::vector<MultiPartition> out;
    if (r < 1 || n < 0) return out;
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = partitions_of(k);
    std::vector<Partition> cur(r);
    auto rec = [&](auto&& self, int color, int remaining) -> void {
        if (color == r - 1) {
            for (const auto& p : by_size[remaining]) {
                cur[color] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            for (const auto& p : by_size[k]) {
                cur[color] = p;
                self(self, color + 1, remaining - k);
            }
        }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace wreath
