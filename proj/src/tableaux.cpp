#include "hookforge/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookforge {

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::vector<int> lengths;
    for (const auto& r : rows_) {
        lengths.push_back(static_cast<int>(r.size()));
        size_ += static_cast<int>(r.size());
    }
    static_cast<void>(Partition(lengths));  // validates the shape
    std::vector<bool> seen(size_ + 1, false);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            const int v = rows_[i][j];
            if (v < 1 || v > size_ || seen[v]) throw std::invalid_argument("tableau entries must be a permutation of 1..n");
            seen[v] = true;
            if (j > 0 && rows_[i][j - 1] >= v) throw std::invalid_argument("tableau rows must increase");
            if (i > 0 && rows_[i - 1][j] >= v) throw std::invalid_argument("tableau columns must increase");
        }
    }
}

Partition StandardTableau::shape() const {
    std::vector<int> lengths;
    lengths.reserve(rows_.size());
    for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
    return Partition(std::move(lengths));
}

int StandardTableau::at(Cell c) const {
    if (c.row < 1 || c.row > static_cast<int>(rows_.size()) || c.col < 1 ||
        c.col > static_cast<int>(rows_[c.row - 1].size()))
        throw std::out_of_range("cell " + hookforge::to_string(c) + " is not in the tableau");
    return rows_[c.row - 1][c.col - 1];
}

std::vector<Cell> StandardTableau::corners() const {
    return corner_profile(shape()).inner_cells;
}

std::vector<int> StandardTableau::reading_word() const {
    std::vector<int> w;
    w.reserve(size_);
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string StandardTableau::to_string() const {
    if (rows_.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += '/';
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) s += ' ';
            s += std::to_string(rows_[i][j]);
        }
    }
    return s;
}

StandardTableau StandardTableau::parse(const std::string& text) {
    if (text == "-") return StandardTableau();
    std::vector<std::vector<int>> rows;
    std::stringstream all(text);
    std::string row_text;
    while (std::getline(all, row_text, '/')) {
        std::istringstream in(row_text);
        std::vector<int> row;
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || used == 0) throw std::invalid_argument("malformed tableau: '" + text + "'");
            row.push_back(v);
        }
        if (row.empty()) throw std::invalid_argument("malformed tableau: '" + text + "'");
        rows.push_back(std::move(row));
    }
    if (rows.empty() || text.back() == '/') throw std::invalid_argument("malformed tableau: '" + text + "'");
    return StandardTableau(std::move(rows));
}

namespace {

// Places n, n-1, ..., 1 at successive removable corners.
void fill_from_largest(std::vector<int>& lengths, std::vector<std::vector<int>>& grid, int next,
                       std::vector<StandardTableau>& out) {
    if (next == 0) {
        out.emplace_back(grid);
        return;
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const int len = lengths[i];
        if (len == 0) continue;
        const int below = (i + 1 < lengths.size()) ? lengths[i + 1] : 0;
        if (below >= len) continue;
        grid[i][len - 1] = next;
        --lengths[i];
        fill_from_largest(lengths, grid, next - 1, out);
        ++lengths[i];
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    std::vector<StandardTableau> out;
    std::vector<int> lengths = shape.parts();
    std::vector<std::vector<int>> grid;
    for (int len : lengths) grid.emplace_back(len, 0);
    fill_from_largest(lengths, grid, shape.size(), out);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.reading_word() < b.reading_word();
    });
    return out;
}

std::vector<StandardTableau> enumerate_syt(int n) {
    std::vector<StandardTableau> out;
    for (const Partition& p : partitions_of(n)) {
        auto part = enumerate_syt(p);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

Ejection reverse_row_insert(const StandardTableau& tableau, Cell corner) {
    const auto corners = tableau.corners();
    if (std::find(corners.begin(), corners.end(), corner) == corners.end())
        throw std::invalid_argument("cell " + to_string(corner) + " is not a removable corner of the tableau");
    std::vector<std::vector<int>> rows = tableau.rows();
    auto& last = rows[corner.row - 1];
    int moving = last.back();
    last.pop_back();
    if (last.empty()) rows.pop_back();
    for (int r = corner.row - 1; r >= 1; --r) {
        auto& row = rows[r - 1];
        // Largest entry smaller than the moving one; rows are sorted.
        auto it = std::lower_bound(row.begin(), row.end(), moving);
        --it;
        std::swap(*it, moving);
    }
    for (auto& row : rows)
        for (int& v : row)
            if (v > moving) --v;
    return {StandardTableau(std::move(rows)), moving};
}

Insertion forward_row_insert(const StandardTableau& tableau, int letter) {
    if (letter < 1 || letter > tableau.size() + 1)
        throw std::invalid_argument("insertion letter " + std::to_string(letter) + " outside 1.." +
                                    std::to_string(tableau.size() + 1));
    std::vector<std::vector<int>> rows = tableau.rows();
    for (auto& row : rows)
        for (int& v : row)
            if (v >= letter) ++v;
    int moving = letter;
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) rows.emplace_back();
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), moving);
        if (it == row.end()) {
            row.push_back(moving);
            const Cell cell{static_cast<int>(r) + 1, static_cast<int>(row.size())};
            return {StandardTableau(std::move(rows)), cell};
        }
        std::swap(*it, moving);
    }
}

}  // namespace hookforge
