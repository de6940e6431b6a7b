#pragma once

// Integer partitions, Young diagrams and the combinatorics that does not need
// abaci: residues, dominance, rectangles, ribbon removal.

#include <compare>
#include <string>
#include <vector>

#include "wreath/field.hpp"

namespace wreath {

/// Box of a Young diagram: `col` a and `row` b, both 0-based.
struct Cell {
    int col = 0;
    int row = 0;
    bool operator==(const Cell&) const = default;
};

/// (row - col) mod r.
int residue(Cell c, int r);

class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; anything else non-increasing or negative throws.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    /// 1-based part lambda_b, zero past the length.
    int part(int b) const { return b >= 1 && b <= length() ? parts_[b - 1] : 0; }

    Partition transpose() const;
    std::vector<Cell> cells() const;
    bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.col < part(c.row + 1); }
    bool contains(const Partition& inner) const;
    int hook_length(Cell c) const;

    /// Lexicographic on parts (a linear extension of dominance among equal sizes).
    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// r-tuple of partitions, component i is the color-i slot.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(int r) : comps_(r) {}
    explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

    int r() const { return static_cast<int>(comps_.size()); }
    const Partition& operator[](int i) const { return comps_[i]; }
    Partition& operator[](int i) { return comps_[i]; }
    const std::vector<Partition>& components() const { return comps_; }
    int size() const;

    /// Lexicographic by color then partition.
    auto operator<=>(const MultiPartition&) const = default;
    bool operator==(const MultiPartition&) const = default;

    std::string to_string() const;

private:
    std::vector<Partition> comps_;
};

/// Residue multiplicities d_0..d_{r-1} over the cells of lambda.
std::vector<int> residue_counts(const Partition& lambda, int r);

/// Strict dominance; throws on a size mismatch.
bool dominance_lt(const Partition& lambda, const Partition& mu);

Partition add_rectangle(const Partition& lambda, int rows, int cols);

/// True when outer/inner is a nonempty connected skew shape with at most one
/// cell on each diagonal.
bool is_ribbon(const Partition& outer, const Partition& inner);

bool is_core(const Partition& lambda, int r);

/// Removes r-ribbons until none is left.  Of the removable ribbons the one
/// whose head (top-right cell) sits in the lowest row is removed first.
Partition strip_ribbon_core(const Partition& lambda, int r);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All r-tuples of partitions with total size n, in MultiPartition order.
std::vector<MultiPartition> multipartitions_of(int n, int r);

}  // namespace wreath
