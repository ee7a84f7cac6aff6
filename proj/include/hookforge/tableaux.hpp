#pragma once

#include "hookforge/partitions.hpp"

#include <string>
#include <vector>

namespace hookforge {

/// Standard Young tableau: the shape filled with 1..n, strictly increasing
/// along rows and down columns. Stored row by row.
class StandardTableau {
public:
    StandardTableau() = default;
    /// Throws std::invalid_argument unless the rows form a valid SYT.
    explicit StandardTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const { return size_; }
    int at(Cell c) const;

    /// Removable cells of the shape, top to bottom.
    std::vector<Cell> corners() const;

    /// Row-major concatenation of the entries.
    std::vector<int> reading_word() const;

    /// Rows of space-separated entries joined by "/", e.g. "1 3/2". The
    /// empty tableau is "-".
    std::string to_string() const;
    static StandardTableau parse(const std::string& text);

    friend bool operator==(const StandardTableau&, const StandardTableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
    int size_ = 0;
};

/// All SYT of the shape, ordered lexicographically by reading word.
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// All SYT with n cells, shapes in partitions_of(n) order.
std::vector<StandardTableau> enumerate_syt(int n);

struct Ejection {
    StandardTableau tableau;  // size n-1, standardized to 1..n-1
    int letter = 0;           // ejected letter i in 1..n
};

/// Reverse row-insertion from the removable corner x: the entry at x moves
/// up one row at a time, displacing the largest smaller entry, until a
/// letter falls out of row 1. Entries above that letter are then lowered by
/// one. Throws std::invalid_argument if x is not a removable corner.
Ejection reverse_row_insert(const StandardTableau& tableau, Cell corner);

struct Insertion {
    StandardTableau tableau;
    Cell cell;  // the cell created by the insertion
};

/// Inverse of reverse_row_insert: raises entries >= i by one, then
/// row-inserts i. Throws std::invalid_argument unless 1 <= i <= size+1.
Insertion forward_row_insert(const StandardTableau& tableau, int letter);

}  // namespace hookforge
