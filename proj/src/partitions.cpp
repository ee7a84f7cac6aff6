#include "hookforge/partitions.hpp"

#include <charconv>
#include <functional>
#include <stdexcept>

namespace hookforge {

std::string to_string(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::row_length(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::column_length(int j) const {
    if (j < 1) return 0;
    int len = 0;
    while (len < length() && parts_[len] >= j) ++len;
    return len;
}

bool Partition::contains(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    const int width = empty() ? 0 : parts_.front();
    out.reserve(width);
    for (int j = 1; j <= width; ++j) out.push_back(column_length(j));
    return Partition(std::move(out));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(size_);
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= parts_[i - 1]; ++j) out.push_back({i, j});
    return out;
}

std::string Partition::to_string() const {
    if (empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    if (text == "-") return Partition();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        int v = 0;
        const char* first = text.data() + pos;
        const char* last = text.data() + comma;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || first == last)
            throw std::invalid_argument("malformed partition: '" + text + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Largest first part first gives reverse-lexicographic order.
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

int hook_length(const Partition& shape, Cell c) {
    if (!shape.contains(c)) throw std::out_of_range("cell " + to_string(c) + " is not in " + shape.to_string());
    const int arm = shape.row_length(c.row) - c.col;
    const int leg = shape.column_length(c.col) - c.row;
    return arm + leg + 1;
}

std::vector<int> hook_lengths(const Partition& shape) {
    std::vector<int> out;
    out.reserve(shape.size());
    const Partition conj = shape.conjugate();
    for (const Cell c : shape.cells())
        out.push_back(shape.row_length(c.row) - c.col + conj.row_length(c.col) - c.row + 1);
    return out;
}

BigInt f_lambda(const Partition& shape) {
    BigInt prod = 1;
    for (int h : hook_lengths(shape)) prod *= h;
    const BigInt n_fact = factorial(static_cast<unsigned long>(shape.size()));
    if (!mpz_divisible_p(n_fact.get_mpz_t(), prod.get_mpz_t()))
        throw IdentityViolation("hook formula quotient is not integral for " + shape.to_string());
    BigInt out;
    mpz_divexact(out.get_mpz_t(), n_fact.get_mpz_t(), prod.get_mpz_t());
    return out;
}

CornerProfile corner_profile(const Partition& shape) {
    CornerProfile p;
    const int rows = shape.length();
    for (int i = 1; i <= rows + 1; ++i) {
        const int len = shape.row_length(i);
        if (i == 1 || shape.row_length(i - 1) > len) {
            const Cell c{i, len + 1};
            p.outer_cells.push_back(c);
            p.outer_contents.push_back(content(c));
        }
        if (i <= rows && len > shape.row_length(i + 1)) {
            const Cell c{i, len};
            p.inner_cells.push_back(c);
            p.inner_contents.push_back(content(c));
        }
    }
    return p;
}

Partition add_cell(const Partition& shape, Cell c) {
    const bool addable = c.row >= 1 && c.row <= shape.length() + 1 && c.col == shape.row_length(c.row) + 1 &&
                         (c.row == 1 || shape.row_length(c.row - 1) >= c.col);
    if (!addable) throw std::invalid_argument("cell " + to_string(c) + " is not an addable corner of " + shape.to_string());
    std::vector<int> parts = shape.parts();
    if (c.row == shape.length() + 1)
        parts.push_back(1);
    else
        ++parts[c.row - 1];
    return Partition(std::move(parts));
}

Partition remove_cell(const Partition& shape, Cell c) {
    const bool removable = shape.contains(c) && c.col == shape.row_length(c.row) &&
                           shape.row_length(c.row + 1) < c.col;
    if (!removable) throw std::invalid_argument("cell " + to_string(c) + " is not a removable corner of " + shape.to_string());
    std::vector<int> parts = shape.parts();
    if (--parts[c.row - 1] == 0) parts.pop_back();
    return Partition(std::move(parts));
}

}  // namespace hookforge
