#include <doctest.h>

#include "hookforge/involutions.hpp"
#include "hookforge/tableaux.hpp"

#include <algorithm>
#include <set>

using namespace hookforge;

namespace {

using Rows = std::vector<std::vector<int>>;

// Textbook Schensted insertion on raw rows, used as an oracle for the
// forward step after the shift of entries >= letter.
std::pair<Rows, Cell> schensted_insert(Rows rows, int letter) {
    for (auto& r : rows)
        for (int& v : r)
            if (v >= letter) ++v;
    int carry = letter;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) rows.emplace_back();
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            return {rows, Cell{static_cast<int>(i) + 1, static_cast<int>(row.size())}};
        }
        std::swap(carry, *it);
    }
}

}  // namespace

TEST_CASE("tableau validation and text form") {
    CHECK_THROWS_AS(StandardTableau(Rows{{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau(Rows{{1, 2}, {3, 4, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau(Rows{{1, 3}, {4}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau(Rows{{1, 2}, {1}}), std::invalid_argument);
    const StandardTableau t(Rows{{1, 3}, {2}});
    CHECK(t.to_string() == "1 3/2");
    CHECK(StandardTableau::parse("1 3/2") == t);
    CHECK(StandardTableau().to_string() == "-");
    CHECK(StandardTableau::parse("-") == StandardTableau());
    CHECK(t.shape() == Partition({2, 1}));
    CHECK(t.at({2, 1}) == 2);
    CHECK(t.corners() == std::vector<Cell>{{1, 2}, {2, 1}});
}

TEST_CASE("enumerate_syt examples") {
    CHECK(enumerate_syt(Partition({1, 1})).size() == 1);
    const auto two_one = enumerate_syt(Partition({2, 1}));
    REQUIRE(two_one.size() == 2);
    CHECK(two_one[0].to_string() == "1 2/3");
    CHECK(two_one[1].to_string() == "1 3/2");
    CHECK(enumerate_syt(Partition({2, 2})).size() == 2);
    CHECK(enumerate_syt(0).size() == 1);
}

TEST_CASE("enumeration is valid, distinct, ordered, and counts involutions") {
    for (int n = 0; n <= 10; ++n) {
        const auto all = enumerate_syt(n);
        CHECK(BigInt(static_cast<unsigned long>(all.size())) == involution_count(n));
        std::set<std::string> seen;
        for (const auto& t : all) {
            CHECK(t.size() == n);
            seen.insert(t.to_string());
        }
        CHECK(seen.size() == all.size());
        for (const Partition& shape : partitions_of(n)) {
            const auto some = enumerate_syt(shape);
            CHECK(std::is_sorted(some.begin(), some.end(),
                                 [](const auto& a, const auto& b) { return a.reading_word() < b.reading_word(); }));
        }
    }
}

TEST_CASE("reverse row insertion examples") {
    const auto single = reverse_row_insert(StandardTableau(Rows{{1}}), {1, 1});
    CHECK(single.tableau == StandardTableau());
    CHECK(single.letter == 1);

    const auto row = reverse_row_insert(StandardTableau(Rows{{1, 2}}), {1, 2});
    CHECK(row.tableau.to_string() == "1");
    CHECK(row.letter == 2);

    // 2 rises into row 1 and displaces 1; the remaining 2,3 shift down to 1,2.
    const StandardTableau p(Rows{{1, 3}, {2}});
    const auto e = reverse_row_insert(p, {2, 1});
    CHECK(e.tableau.to_string() == "1 2");
    CHECK(e.letter == 1);
    const auto back = forward_row_insert(e.tableau, e.letter);
    CHECK(back.tableau == p);
    CHECK(back.cell == Cell{2, 1});

    CHECK_THROWS_AS(reverse_row_insert(p, {1, 1}), std::invalid_argument);
}

TEST_CASE("forward row insertion") {
    const auto first = forward_row_insert(StandardTableau(), 1);
    CHECK(first.tableau.to_string() == "1");
    CHECK(first.cell == Cell{1, 1});
    CHECK_THROWS_AS(forward_row_insert(StandardTableau(), 2), std::invalid_argument);
    CHECK_THROWS_AS(forward_row_insert(StandardTableau(Rows{{1}}), 0), std::invalid_argument);
}

TEST_CASE("forward insertion agrees with textbook Schensted insertion") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& t : enumerate_syt(n))
            for (int i = 1; i <= n + 1; ++i) {
                const auto got = forward_row_insert(t, i);
                const auto [rows, cell] = schensted_insert(t.rows(), i);
                CHECK(got.tableau.rows() == rows);
                CHECK(got.cell == cell);
            }
}

TEST_CASE("insertion and deletion are mutually inverse") {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::pair<std::string, int>> images;
        std::size_t pairs = 0;
        for (const auto& p : enumerate_syt(n))
            for (Cell x : p.corners()) {
                const auto e = reverse_row_insert(p, x);
                const auto back = forward_row_insert(e.tableau, e.letter);
                CHECK(back.tableau == p);
                CHECK(back.cell == x);
                images.emplace(e.tableau.to_string(), e.letter);
                ++pairs;
            }
        CHECK(images.size() == pairs);
        CHECK(pairs == enumerate_syt(n - 1).size() * static_cast<std::size_t>(n));
    }
}
