#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ptab/enumeration.hpp"
#include "ptab/statistics.hpp"
#include "ptab/tableau.hpp"
#include "ptab/textio.hpp"
#include "test_helpers.hpp"

using namespace ptab;

TEST_CASE("permutation stream walks all n! words in lexicographic order") {
    PermutationStream stream(3);
    std::vector<Permutation> all;
    while (auto p = stream.next()) all.push_back(*p);
    REQUIRE(all.size() == 6);
    CHECK(all.front() == Permutation::from_word({1, 2, 3}));
    CHECK(all.back() == Permutation::from_word({3, 2, 1}));
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].word() < all[i].word());
    }

    PermutationStream singleton(1);
    CHECK(singleton.next() == Permutation::from_word({1}));
    CHECK(!singleton.next().has_value());

    PermutationStream big(8);
    std::uint64_t count = 0;
    while (big.next()) ++count;
    CHECK(count == 40320);
}

TEST_CASE("enumeration limits are configuration, not constants") {
    CHECK_ERRC(PermutationStream(0), errc::limit_exceeded);
    CHECK_ERRC(PermutationStream(13), errc::limit_exceeded);
    CHECK_ERRC(TableauStream(0), errc::limit_exceeded);
    CHECK_ERRC(TableauStream(11), errc::limit_exceeded);

    const EnumerationLimits tight{.max_permutation_size = 3, .max_tableau_length = 2};
    CHECK_ERRC(PermutationStream(4, tight), errc::limit_exceeded);
    CHECK_ERRC(TableauStream(3, std::nullopt, tight), errc::limit_exceeded);
    CHECK(PermutationStream(3, tight).next().has_value());

    const EnumerationLimits roomy{.max_permutation_size = 12, .max_tableau_length = 11};
    CHECK(TableauStream(11, std::nullopt, roomy).next().has_value());
    CHECK_ERRC(descent_counts(13), errc::limit_exceeded);
    CHECK_ERRC(tableau_counts(11), errc::limit_exceeded);
    CHECK_ERRC(count_table(0), errc::limit_exceeded);
}

TEST_CASE("tableau stream yields each valid tableau exactly once, in order") {
    SUBCASE("single length one tableau") {
        TableauStream stream(1);
        auto t = stream.next();
        REQUIRE(t.has_value());
        CHECK(t->shape().to_string() == "S");
        CHECK(t->shape().cell_count() == 0);
        CHECK(!stream.next().has_value());
    }

    SUBCASE("boundary words ascend as binary numbers, south before west") {
        TableauStream stream(2);
        auto first = stream.next();
        auto second = stream.next();
        REQUIRE(first.has_value());
        REQUIRE(second.has_value());
        CHECK(first->shape().to_string() == "SS");
        CHECK(second->shape().to_string() == "SW");
        CHECK(second->at({1, 2}));
        CHECK(!stream.next().has_value());
    }

    SUBCASE("no duplicates and every element is valid") {
        for (int n = 1; n <= 6; ++n) {
            TableauStream stream(n);
            std::set<std::string> seen;
            while (auto t = stream.next()) {
                REQUIRE(validate_filling(t->shape(), t->bits()).ok());
                REQUIRE(seen.insert(serialize_tableau(*t)).second);
            }
        }
    }

    SUBCASE("column filter matches the unfiltered stream") {
        std::uint64_t total = 0;
        for (int k = 0; k < 3; ++k) {
            TableauStream stream(3, k);
            while (auto t = stream.next()) {
                REQUIRE(t->column_count() == k);
                ++total;
            }
        }
        CHECK(total == 6);

        TableauStream one_column(3, 1);
        std::uint64_t count = 0;
        while (one_column.next()) ++count;
        CHECK(count == 4);
    }
}

TEST_CASE("checked arithmetic traps wraparound") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(6, 7) == 42);
    CHECK_ERRC(checked_add(UINT64_MAX, 1), errc::overflow);
    CHECK_ERRC(checked_mul(UINT64_MAX / 2, 3), errc::overflow);

    CHECK(factorial(0) == 1);
    CHECK(factorial(8) == 40320);
    CHECK(factorial(20) == 2432902008176640000ull);
    CHECK_ERRC(factorial(21), errc::overflow);
    CHECK_ERRC(factorial(-1), errc::out_of_range);
}

TEST_CASE("Eulerian recurrence reproduces the small rows") {
    CHECK(eulerian(1, 0) == 1);
    CHECK(eulerian_row(2) == std::vector<std::uint64_t>{1, 1});
    CHECK(eulerian_row(3) == std::vector<std::uint64_t>{1, 4, 1});
    CHECK(eulerian_row(4) == std::vector<std::uint64_t>{1, 11, 11, 1});
    CHECK(eulerian(4, 1) == 11);

    CHECK_ERRC(eulerian(0, 0), errc::out_of_range);
    CHECK_ERRC(eulerian(3, -1), errc::out_of_range);
    CHECK_ERRC(eulerian(3, 3), errc::out_of_range);
    CHECK_ERRC(eulerian_row(0), errc::out_of_range);
    CHECK_ERRC(eulerian_row(25), errc::overflow);
}

TEST_CASE("Eulerian triangle is palindromic and rows sum to n!") {
    for (int n = 1; n <= 12; ++n) {
        const std::vector<std::uint64_t> row = eulerian_row(n);
        REQUIRE(static_cast<int>(row.size()) == n);
        std::uint64_t sum = 0;
        for (int k = 0; k < n; ++k) {
            CHECK(row[k] == row[n - 1 - k]);
            CHECK(eulerian(n, k) == row[k]);
            sum = checked_add(sum, row[k]);
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("tableau counts, descent counts and Eulerian numbers coincide") {
    for (int n = 1; n <= 8; ++n) {
        const std::vector<std::uint64_t> tabs = tableau_counts(n);
        const std::vector<std::uint64_t> perms = descent_counts(n);
        const std::vector<std::uint64_t> euler = eulerian_row(n);
        REQUIRE(tabs == perms);
        REQUIRE(tabs == euler);
    }
}

TEST_CASE("count table cross-checks itself and sums to n!") {
    CHECK(count_table(1).by_columns == std::vector<std::uint64_t>{1});
    CHECK(count_table(2).by_columns == std::vector<std::uint64_t>{1, 1});
    CHECK(count_table(3).by_columns == std::vector<std::uint64_t>{1, 4, 1});

    for (int n = 1; n <= 7; ++n) {
        const CountTable table = count_table(n);
        CHECK(table.n == n);
        std::uint64_t sum = 0;
        for (std::uint64_t c : table.by_columns) sum = checked_add(sum, c);
        CHECK(sum == factorial(n));
    }
}
