#pragma once

#include "hookforge/exact/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace hookforge {

/// A box of a Young diagram, English convention, 1-based: row 1 is the top
/// row and column 1 the leftmost column.
struct Cell {
    int row = 1;
    int col = 1;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// c(i, j) = j - i, constant along diagonals.
constexpr int content(Cell c) { return c.col - c.row; }

std::string to_string(Cell c);

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Length of row i (1-based); 0 below the last row.
    int row_length(int i) const;
    /// Length of column j (1-based); 0 right of the first row.
    int column_length(int j) const;
    bool contains(Cell c) const;

    Partition conjugate() const;

    /// Cells in row-major order.
    std::vector<Cell> cells() const;

    /// "3,1"; the empty partition is "-".
    std::string to_string() const;
    /// Inverse of to_string(). Throws std::invalid_argument.
    static Partition parse(const std::string& text);

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Every partition of n exactly once, reverse-lexicographic: (n) first,
/// (1^n) last. Throws std::invalid_argument for negative n.
std::vector<Partition> partitions_of(int n);

/// arm + leg + 1. Throws std::out_of_range when c lies outside the shape.
int hook_length(const Partition& shape, Cell c);

/// Hook lengths of all cells in row-major order.
std::vector<int> hook_lengths(const Partition& shape);

/// Number of standard Young tableaux of the shape, n! / prod of hooks. The
/// quotient is checked to be integral.
BigInt f_lambda(const Partition& shape);

/// Corner structure of a shape.
///
/// "Outer" corners are the d positions where a cell can be ADDED; "inner"
/// corners are the d-1 cells that can be REMOVED (the cells of hook length
/// one). Some texts use the opposite names. Both lists run from the top-right
/// of the diagram to the bottom-left, so contents strictly decrease and
/// interlace: x_1 > y_1 > x_2 > ... > y_{d-1} > x_d.
struct CornerProfile {
    std::vector<int> outer_contents;
    std::vector<int> inner_contents;
    std::vector<Cell> outer_cells;
    std::vector<Cell> inner_cells;

    int d() const { return static_cast<int>(outer_cells.size()); }
};

CornerProfile corner_profile(const Partition& shape);

/// Throws std::invalid_argument unless c is an addable corner of the shape.
Partition add_cell(const Partition& shape, Cell c);
/// Throws std::invalid_argument unless c is a removable corner of the shape.
Partition remove_cell(const Partition& shape, Cell c);

}  // namespace hookforge
