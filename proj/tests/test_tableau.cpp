#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "chainloop/errors.hpp"
#include "chainloop/tableau.hpp"

using namespace chainloop;

namespace {

const RectTableau kRunning({{1, 3, 4}, {2, 5, 6}});

// Shapes with at most `cells` cells, both orientations.
std::vector<std::pair<int, int>> shapes_up_to(int cells) {
    std::vector<std::pair<int, int>> shapes;
    for (int m = 1; m <= cells; ++m) {
        for (int n = 1; m * n <= cells; ++n) shapes.emplace_back(m, n);
    }
    return shapes;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(validate(kRunning));
    CHECK(!validate(RectTableau({{1, 2}, {2, 3}})));  // duplicate
    CHECK(!validate(RectTableau({{2, 1}})));          // row order
    CHECK(!validate(RectTableau({{1, 2}, {3, 3}})));
    CHECK(!validate(RectTableau({{1, 4}, {2, 3}})));  // column order
    CHECK(!validate(RectTableau({{1, 7}, {2, 3}})));  // out of range
    CHECK_THROWS_AS(RectTableau({{1, 2}, {3}}), ValidationError);
}

TEST_CASE("hook length counts") {
    CHECK(hook_count(1, 1) == 1);
    for (int k = 1; k <= 9; ++k) CHECK(hook_count(1, k) == 1);
    CHECK(hook_count(2, 3) == 5);  // 720 / 144
    CHECK(hook_count(3, 4) == 462);
    CHECK(hook_count(4, 3) == 462);
    CHECK(hook_count(2, 5) == 42);
}

TEST_CASE("enumeration agrees with the hook count and is sorted") {
    for (const auto& [m, n] : shapes_up_to(12)) {
        const std::vector<RectTableau> all = enumerate_tableaux(m, n);
        CHECK(mpz_class(static_cast<long>(all.size())) == hook_count(m, n));
        for (const RectTableau& t : all) CHECK(t.is_valid());
        CHECK(std::is_sorted(all.begin(), all.end(),
                             [](const RectTableau& a, const RectTableau& b) {
                                 return a.entries() < b.entries();
                             }));
        // No duplicates, given sortedness.
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("single-column and single-row shapes are forced") {
    const std::vector<RectTableau> row = enumerate_tableaux(1, 7);
    REQUIRE(row.size() == 1);
    std::vector<int> expected(7);
    std::iota(expected.begin(), expected.end(), 1);
    CHECK(row.front().entries() == expected);
}

TEST_CASE("enumeration ceiling") {
    CHECK_THROWS_AS(enumerate_tableaux(5, 4), ValidationError);  // 20 > 16
    CHECK_THROWS_AS(enumerate_tableaux(3, 3, 8), ValidationError);
    CHECK(enumerate_tableaux(5, 4, 20).size() ==
          hook_count(5, 4).get_ui());
}

TEST_CASE("evacuation examples") {
    CHECK(evacuate(kRunning) == RectTableau({{1, 2, 5}, {3, 4, 6}}));
    CHECK(evacuate(RectTableau({{1, 2}, {3, 4}})) ==
          RectTableau({{1, 2}, {3, 4}}));
    CHECK_THROWS_AS(evacuate(RectTableau({{2, 1}})), ValidationError);
}

TEST_CASE("transpose examples") {
    CHECK(transpose(kRunning) == RectTableau({{1, 2}, {3, 5}, {4, 6}}));
    CHECK(transpose(RectTableau({{1}, {2}})) == RectTableau({{1, 2}}));
}

TEST_CASE("evacuate and transpose are involutions on every small tableau") {
    for (const auto& [m, n] : shapes_up_to(12)) {
        for (const RectTableau& t : enumerate_tableaux(m, n)) {
            const RectTableau ev = evacuate(t);
            CHECK(ev.rows() == m);
            CHECK(ev.cols() == n);
            CHECK(ev.is_valid());
            CHECK(evacuate(ev) == t);

            const RectTableau tt = transpose(t);
            CHECK(tt.rows() == n);
            CHECK(tt.cols() == m);
            CHECK(tt.is_valid());
            CHECK(transpose(tt) == t);
        }
    }
}

TEST_CASE("cell statistics") {
    CHECK(cell_stats(kRunning, 5) == CellStats{2, 2, 2, 1});
    CHECK(cell_stats(kRunning, 1) == CellStats{1, 1, 0, 0});
    CHECK(cell_stats(kRunning, 4) == CellStats{1, 3, 2, 0});
    CHECK_THROWS_AS(cell_stats(kRunning, 0), ValidationError);
    CHECK_THROWS_AS(cell_stats(kRunning, 7), ValidationError);
}

TEST_CASE("column prefix counts") {
    CHECK(count_at_most_in_col(kRunning, 4, 3) == 1);
    for (int s = 1; s <= 3; ++s) {
        CHECK(count_at_most_in_col(kRunning, 6, s) == 2);
        CHECK(count_at_most_in_col(kRunning, 0, s) == 0);
    }
    CHECK_THROWS_AS(count_at_most_in_col(kRunning, 3, 0), ValidationError);
    CHECK_THROWS_AS(count_at_most_in_col(kRunning, 3, 4), ValidationError);
}

TEST_CASE("the cell of i is the deepest counted cell in its own column") {
    for (const auto& [m, n] : shapes_up_to(10)) {
        for (const RectTableau& t : enumerate_tableaux(m, n)) {
            for (int i = 1; i <= t.size(); ++i) {
                const CellStats s = cell_stats(t, i);
                CHECK(count_at_most_in_col(t, i, s.col) == s.row);
            }
        }
    }
}
