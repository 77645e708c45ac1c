#include <map>
#include <optional>
#include <set>
#include <vector>

#include "figures.hpp"
#include "ptab/bijection.hpp"
#include "ptab/enumeration.hpp"
#include "ptab/statistics.hpp"
#include "test_helpers.hpp"

using namespace ptab;

TEST_CASE("the fill order starts eastmost and southmost") {
    const BoundaryWord f1 = fixtures::figure1().shape();
    CHECK(next_unfilled_cell(f1, {}) == Cell{4, 5});
    CHECK(next_unfilled_cell(fixtures::figure2().shape(), {}) == Cell{2, 3});

    std::set<Cell> filled(f1.cells().begin(), f1.cells().end());
    CHECK(!next_unfilled_cell(f1, filled).has_value());
    filled.erase({2, 6});
    CHECK(next_unfilled_cell(f1, filled) == Cell{2, 6});
}

TEST_CASE("forward map reproduces the first worked example, event by event") {
    const ForwardResult result = perm_to_tableau(fixtures::figure1_perm());
    CHECK(result.tableau == fixtures::figure1());
    CHECK(result.final_word == PartialWord({1, 3, 7}));

    const PartialWord full({2, 4, 8, 5, 1, 6, 3, 7});
    const PartialWord no5({2, 4, 8, 1, 6, 3, 7});
    const PartialWord no56({2, 4, 8, 1, 3, 7});
    const PartialWord no456({2, 8, 1, 3, 7});
    const PartialWord no2456({8, 1, 3, 7});
    const PartialWord final_word({1, 3, 7});
    const FillTrace expected = {
        {{4, 5}, true, FillCase::NotAdjacent, std::nullopt, full},
        {{3, 5}, true, FillCase::NotAdjacent, std::nullopt, full},
        {{2, 5}, true, FillCase::NotAdjacent, std::nullopt, full},
        {{1, 5}, true, FillCase::ColumnFill, 5, no5},
        {{4, 6}, true, FillCase::NotAdjacent, std::nullopt, no5},
        {{3, 6}, true, FillCase::ColumnFill, 6, no56},
        {{2, 6}, false, FillCase::ColumnFill, 6, no56},
        {{1, 6}, false, FillCase::ColumnFill, 6, no56},
        {{7, 8}, true, FillCase::NotAdjacent, std::nullopt, no56},
        {{4, 8}, false, FillCase::RowFill, 4, no456},
        {{3, 8}, true, FillCase::NotAdjacent, std::nullopt, no456},
        {{2, 8}, false, FillCase::RowFill, 2, no2456},
        {{1, 8}, true, FillCase::ColumnFill, 8, final_word},
    };
    CHECK(result.trace == expected);
}

TEST_CASE("forward map reproduces the second worked example, event by event") {
    const ForwardResult result = perm_to_tableau(fixtures::figure2_perm());
    CHECK(result.tableau == fixtures::figure2());
    CHECK(result.final_word == PartialWord({1, 6}));

    const PartialWord no2({8, 5, 4, 7, 3, 1, 6});
    const PartialWord no23({8, 5, 4, 7, 1, 6});
    const PartialWord no235({8, 4, 7, 1, 6});
    const PartialWord no2345({8, 7, 1, 6});
    const PartialWord no23457({8, 1, 6});
    const PartialWord final_word({1, 6});
    const FillTrace expected = {
        {{2, 3}, false, FillCase::RowFill, 2, no2},
        {{2, 5}, false, FillCase::RowFill, 2, no2},
        {{2, 7}, false, FillCase::RowFill, 2, no2},
        {{2, 8}, false, FillCase::RowFill, 2, no2},
        {{1, 3}, true, FillCase::ColumnFill, 3, no23},
        {{4, 5}, true, FillCase::ColumnFill, 5, no235},
        {{1, 5}, false, FillCase::ColumnFill, 5, no235},
        {{6, 7}, true, FillCase::NotAdjacent, std::nullopt, no235},
        {{4, 7}, false, FillCase::RowFill, 4, no2345},
        {{4, 8}, false, FillCase::RowFill, 4, no2345},
        {{1, 7}, true, FillCase::ColumnFill, 7, no23457},
        {{6, 8}, true, FillCase::NotAdjacent, std::nullopt, no23457},
        {{1, 8}, true, FillCase::ColumnFill, 8, final_word},
    };
    CHECK(result.trace == expected);
}

TEST_CASE("the identity permutation maps to the empty tableau") {
    const ForwardResult result = perm_to_tableau(Permutation::identity(4));
    CHECK(result.tableau.shape().to_string() == "SSSS");
    CHECK(result.tableau.shape().cell_count() == 0);
    CHECK(result.trace.empty());
    CHECK(result.final_word == PartialWord({1, 2, 3, 4}));
}

TEST_CASE("inverse map replays the first example's insertions") {
    const InverseResult result = tableau_to_perm_traced(fixtures::figure1());
    CHECK(result.permutation == fixtures::figure1_perm());
    CHECK(result.trace.initial_word == PartialWord({1, 3, 7}));

    const std::vector<InsertionStep> expected = {
        {8, 1, {2, 4}, PartialWord({2, 4, 8, 1, 3, 7})},
        {6, 3, {}, PartialWord({2, 4, 8, 1, 6, 3, 7})},
        {5, 1, {}, PartialWord({2, 4, 8, 5, 1, 6, 3, 7})},
    };
    CHECK(result.trace.steps == expected);
}

TEST_CASE("inverse map replays the second example's insertions") {
    const InverseResult result = tableau_to_perm_traced(fixtures::figure2());
    CHECK(result.permutation == fixtures::figure2_perm());
    CHECK(result.trace.initial_word == PartialWord({1, 6}));

    const std::vector<InsertionStep> expected = {
        {8, 1, {}, PartialWord({8, 1, 6})},
        {7, 1, {4}, PartialWord({8, 4, 7, 1, 6})},
        {5, 4, {}, PartialWord({8, 5, 4, 7, 1, 6})},
        {3, 1, {2}, PartialWord({8, 5, 4, 7, 2, 3, 1, 6})},
    };
    CHECK(result.trace.steps == expected);
}

TEST_CASE("the empty tableau maps back to the identity") {
    const PermutationTableau empty = PermutationTableau::create(
        BoundaryWord::from_string("SSSS"), std::map<Cell, int>{});
    CHECK(tableau_to_perm(empty) == Permutation::identity(4));
}

TEST_CASE("round trip from permutations, with trace and word invariants") {
    for (int n = 1; n <= 8; ++n) {
        PermutationStream stream(n);
        while (auto p = stream.next()) {
            const ForwardResult result = perm_to_tableau(*p);

            // The composite is the identity.
            REQUIRE(tableau_to_perm(result.tableau) == *p);

            // Columns are exactly the descents.
            REQUIRE(result.tableau.shape().column_labels() == descent_set(*p));

            // The leftover word is the unrestricted rows, ascending.
            REQUIRE(result.final_word.values() == unrestricted_rows(result.tableau));

            // The trace decides every cell exactly once...
            std::set<Cell> covered;
            for (const FillEvent& event : result.trace) {
                REQUIRE(covered.insert(event.cell).second);
                REQUIRE(event.deleted.has_value() ==
                        (event.fill_case != FillCase::NotAdjacent));
                REQUIRE(result.tableau.at(event.cell) == event.value);
            }
            REQUIRE(static_cast<int>(covered.size()) ==
                    result.tableau.shape().cell_count());

            // ...and deletes exactly the columns and the restricted rows.
            std::set<int> deleted;
            for (const FillEvent& event : result.trace) {
                if (event.deleted) deleted.insert(*event.deleted);
            }
            std::set<int> expected_deleted;
            for (int j : result.tableau.shape().column_labels()) {
                expected_deleted.insert(j);
            }
            for (const auto& [row, cell] : rightmost_restricted_zeros(result.tableau)) {
                expected_deleted.insert(row);
            }
            REQUIRE(deleted == expected_deleted);
        }
    }
}

TEST_CASE("round trip from tableaux") {
    for (int n = 1; n <= 8; ++n) {
        TableauStream stream(n);
        while (auto t = stream.next()) {
            const Permutation p = tableau_to_perm(*t);
            REQUIRE(perm_to_tableau(p).tableau == *t);
        }
    }
}
