#include "hoeffspecht/characters.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace hs;

namespace {

/// chi^(n-l,l) from brute-force fixed-subset scans of a class representative.
std::int64_t scanned_character(int l, Permutation const& x) {
    if (l == 0) return 1;
    return static_cast<std::int64_t>(oracle::brute_fixed_subsets(x, l)) -
           static_cast<std::int64_t>(oracle::brute_fixed_subsets(x, l - 1));
}

}  // namespace

TEST_CASE("standard representation is fix - 1 and trivial character is 1") {
    for (int n = 2; n <= 7; ++n) {
        for (auto const& x : enumerate_permutations(n)) {
            CHECK(two_row_character(1, x) == x.fixed_points() - 1);
            CHECK(two_row_character(0, x) == 1);
        }
    }
}

TEST_CASE("n=4, l=2 character values by class") {
    std::vector<std::pair<std::string, std::int64_t>> const expected = {
        {"1-1-1-1", 2}, {"2-1-1", 0}, {"2-2", 2}, {"3-1", -1}, {"4", 0}};
    for (auto const& [type, value] : expected) {
        auto const ct = CycleType::parse(type);
        CHECK(two_row_character(2, ct) == value);
        CHECK(scanned_character(2, representative(ct)) == value);
    }
    CHECK_THROWS_AS(two_row_character(3, CycleType::parse("1-1-1-1")), std::domain_error);
}

TEST_CASE("characters agree with scanned fixed subsets and are class functions, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (auto const& x : enumerate_permutations(n)) {
            auto const rep = representative(cycle_type(x));
            for (int l = 0; 2 * l <= n; ++l) {
                CHECK(two_row_character(l, x) == scanned_character(l, x));
                CHECK(two_row_character(l, x) == two_row_character(l, rep));
            }
        }
    }
}

TEST_CASE("dimension") {
    for (int n = 2; n <= 12; ++n) CHECK(dimension(n, 1) == static_cast<std::uint64_t>(n - 1));
    CHECK(dimension(9, 0) == 1);
    CHECK(dimension(6, 2) == 9);
    CHECK(dimension(6, 3) == 5);
    CHECK_THROWS_AS(dimension(6, 4), std::domain_error);

    for (int n = 1; n <= 12; ++n) {
        for (int l = 0; 2 * l <= n; ++l) {
            CHECK(dimension(n, l) == static_cast<std::uint64_t>(two_row_character(l, Permutation::identity(n))));
            CHECK(dimension(n, l) == standard_tableau_count(n, l));
        }
        std::uint64_t partial = 0;
        for (int m = 0; 2 * m <= n; ++m) {
            partial += dimension(n, m);
            CHECK(partial == binomial(n, m));
        }
    }
}

TEST_CASE("character table at n=4") {
    auto const table = character_table(4, 2);
    REQUIRE(table.rows.size() == 5);
    std::vector<std::uint64_t> sizes;
    for (auto const& row : table.rows) sizes.push_back(row.class_size);
    CHECK(sizes == std::vector<std::uint64_t>{1, 6, 3, 8, 6});
    for (auto const& row : table.rows) CHECK(row.values[0] == 1);
    for (int l = 0; l <= 2; ++l) {
        std::int64_t sum = 0;
        for (auto const& row : table.rows) {
            sum += static_cast<std::int64_t>(row.class_size) * row.values[static_cast<std::size_t>(l)] *
                   row.values[static_cast<std::size_t>(l)];
        }
        CHECK(sum == 24);
    }
}

TEST_CASE("column orthogonality for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto const table = character_table(n, n / 2);
        auto const order = static_cast<std::int64_t>(factorial(n));
        for (int i = 0; i <= n / 2; ++i) {
            for (int j = 0; j <= n / 2; ++j) {
                std::int64_t sum = 0;
                for (auto const& row : table.rows) {
                    sum += static_cast<std::int64_t>(row.class_size) * row.values[static_cast<std::size_t>(i)] *
                           row.values[static_cast<std::size_t>(j)];
                }
                CHECK(sum == (i == j ? order : 0));
            }
        }
    }
}

TEST_CASE("character table CSV") {
    std::ostringstream out;
    write_character_table_csv(out, character_table(4, 2));
    CHECK(out.str() ==
          "cycle_type,class_size,chi_0,chi_1,chi_2\n"
          "1-1-1-1,1,1,3,2\n"
          "2-1-1,6,1,1,0\n"
          "2-2,3,1,-1,2\n"
          "3-1,8,1,0,-1\n"
          "4,6,1,-1,0\n");
}
