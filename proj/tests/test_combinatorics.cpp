#include "hoeffspecht/combinatorics.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hs;

TEST_CASE("enumerate_subsets: canonical lexicographic order") {
    auto const s = enumerate_subsets(3, 2);
    REQUIRE(s.size() == 3);
    CHECK(s[0].elements() == std::vector<int>{1, 2});
    CHECK(s[1].elements() == std::vector<int>{1, 3});
    CHECK(s[2].elements() == std::vector<int>{2, 3});

    auto const empty = enumerate_subsets(5, 0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].size() == 0);

    CHECK(enumerate_subsets(5, 2).size() == oracle::brute_subsets(5, 2).size());
    CHECK(oracle::brute_subsets(5, 2).size() == 10);

    CHECK_THROWS_AS(enumerate_subsets(5, 6), std::domain_error);
    CHECK_THROWS_AS(enumerate_subsets(5, -1), std::domain_error);
}

TEST_CASE("enumerate_subsets agrees with brute-force mask scan for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        for (int l = 0; l <= n; ++l) {
            auto const got = enumerate_subsets(n, l);
            auto const want = oracle::brute_subsets(n, l);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i].elements() == want[i]);
                CHECK(got[i].rank() == i);
                CHECK(subset_from_rank(n, l, i) == got[i]);
            }
        }
    }
}

TEST_CASE("subset text form") {
    auto const s = Subset::parse(9, "7, 1,4");
    CHECK(s.to_string() == "1,4,7");
    CHECK(Subset::parse(4, "").size() == 0);
    CHECK(Subset::parse(4, "{}").size() == 0);
    CHECK_THROWS(Subset::parse(4, "1,1"));
    CHECK_THROWS(Subset::parse(4, "5"));
    CHECK_THROWS(Subset::parse(4, "1,x"));
}

TEST_CASE("apply_perm_to_subset examples") {
    CHECK(apply_perm_to_subset(Permutation::identity(5), Subset(5, {2, 4})) == Subset(5, {2, 4}));
    auto const cycle = Permutation::from_cycles(5, {{1, 2, 3}});
    CHECK(apply_perm_to_subset(cycle, Subset(5, {1, 3})) == Subset(5, {1, 2}));
    auto const swap45 = Permutation::transposition(5, 4, 5);
    CHECK(apply_perm_to_subset(swap45, Subset(5, {4, 5})) == Subset(5, {4, 5}));
    CHECK_THROWS_AS(apply_perm_to_subset(Permutation::identity(4), Subset(5, {1})), std::domain_error);
}

TEST_CASE("action law x(yS) = (xy)S over all of S_4") {
    std::vector<Permutation> group(enumerate_permutations(4).begin(), enumerate_permutations(4).end());
    for (auto const& x : group) {
        for (auto const& y : group) {
            for (int l = 0; l <= 4; ++l) {
                for (auto const& s : enumerate_subsets(4, l)) {
                    CHECK(apply_perm_to_subset(x, apply_perm_to_subset(y, s)) == apply_perm_to_subset(x * y, s));
                }
            }
        }
    }
}

TEST_CASE("composition and inverse conventions") {
    auto const x = Permutation::from_cycles(4, {{1, 2}});
    auto const y = Permutation::from_cycles(4, {{2, 3}});
    // (xy)(a) = x(y(a)): 2 -> 3 -> 3, 3 -> 2 -> 1
    CHECK((x * y)(2) == 3);
    CHECK((x * y)(3) == 1);
    auto const z = Permutation({3, 1, 4, 2});
    CHECK(z * z.inverse() == Permutation::identity(4));
    CHECK_THROWS_AS(Permutation({1, 1, 2}), std::domain_error);
    CHECK(Permutation::from_cycles(5, {{1, 2, 3}, {4, 5}}).to_string() == "(1 2 3)(4 5)");
}

TEST_CASE("cycle_type examples") {
    CHECK(cycle_type(Permutation::identity(4)).parts == std::vector<int>{1, 1, 1, 1});
    CHECK(cycle_type(Permutation::from_cycles(4, {{1, 2}, {3, 4}})).parts == std::vector<int>{2, 2});
    CHECK(cycle_type(Permutation::from_cycles(4, {{1, 2, 3, 4}})).parts == std::vector<int>{4});
    CHECK(CycleType::parse("3-2-1-1").to_string() == "3-2-1-1");
    CHECK_THROWS(CycleType::parse("1-2"));
}

TEST_CASE("fixed_subset_count examples") {
    CHECK(fixed_subset_count(Permutation::identity(4), 2) == 6);
    CHECK(fixed_subset_count(Permutation::from_cycles(4, {{1, 2}, {3, 4}}), 2) == 2);
    CHECK(fixed_subset_count(Permutation::from_cycles(4, {{1, 2, 3}}), 2) == 0);
}

TEST_CASE("fixed_subset_count matches brute-force scanning for all x in S_n, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (auto const& x : enumerate_permutations(n)) {
            for (int l = 0; l <= n; ++l) CHECK(fixed_subset_count(x, l) == oracle::brute_fixed_subsets(x, l));
        }
    }
}

TEST_CASE("fixed_subset_count is a class function") {
    for (int n = 1; n <= 6; ++n) {
        for (auto const& x : enumerate_permutations(n)) {
            auto const rep = representative(cycle_type(x));
            CHECK(cycle_type(rep) == cycle_type(x));
            for (int l = 0; l <= n; ++l) CHECK(fixed_subset_count(x, l) == fixed_subset_count(rep, l));
        }
    }
}

TEST_CASE("partitions and class sizes against enumeration of S_n") {
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(7).size() == 15);
    CHECK(partitions(10).size() == 42);
    for (int n = 1; n <= 6; ++n) {
        std::map<CycleType, std::uint64_t> counted;
        for (auto const& x : enumerate_permutations(n)) ++counted[cycle_type(x)];
        auto const parts = partitions(n);
        CHECK(parts.size() == counted.size());
        std::uint64_t total = 0;
        for (auto const& type : parts) {
            CHECK(class_size(type) == counted[type]);
            total += class_size(type);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("enumerate_permutations") {
    CHECK(std::distance(enumerate_permutations(3).begin(), enumerate_permutations(3).end()) == 6);
    auto const one = enumerate_permutations(1);
    REQUIRE(std::distance(one.begin(), one.end()) == 1);
    CHECK(*one.begin() == Permutation::identity(1));

    std::set<std::vector<int>> seen;
    for (auto const& x : enumerate_permutations(5)) seen.insert(x.images());
    CHECK(seen.size() == 120);

    CHECK_THROWS_AS(enumerate_permutations(10), ResourceError);
    CHECK_NOTHROW(enumerate_permutations(10, 10));
}

TEST_CASE("columns of a tableau") {
    auto const t = Tableau({2, 1, 3}, {5, 4});
    auto const c = columns(t);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Column{2, 5});
    CHECK(c[1] == Column{1, 4});
    CHECK(c[2] == Column{3, 0});
    CHECK_FALSE(c[2].is_pair());

    auto const c6 = columns(Tableau({1, 2, 3, 4}, {5, 6}));
    REQUIRE(c6.size() == 4);
    CHECK(c6[0] == Column{1, 5});
    CHECK(c6[1] == Column{2, 6});
    CHECK(c6[2] == Column{3, 0});
    CHECK(c6[3] == Column{4, 0});

    auto const c2 = columns(Tableau({1}, {2}));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0] == Column{1, 2});
}

TEST_CASE("tableau validation and text form") {
    CHECK_THROWS_AS(Tableau({1}, {2, 3}), std::domain_error);
    CHECK_THROWS_AS(Tableau({1, 2}, {2}), std::domain_error);
    CHECK_THROWS_AS(Tableau({1, 2, 3}, {}), std::domain_error);
    auto const t = Tableau::parse("2,1,3;5,4");
    CHECK(t.top_row() == std::vector<int>{2, 1, 3});
    CHECK(t.bottom_row() == std::vector<int>{5, 4});
    CHECK(t.to_string() == "2,1,3;5,4");
}

TEST_CASE("tabloid_of forgets row order") {
    CHECK(tabloid_of(Tableau({2, 1, 3}, {5, 4})).bottom_block == Subset(5, {4, 5}));
    CHECK(tabloid_of(Tableau({1, 2, 3, 4}, {5, 6})).bottom_block == Subset(6, {5, 6}));

    Lcg rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        auto const t = random_tableau(8, 3, rng);
        auto top = t.top_row();
        auto bottom = t.bottom_row();
        std::reverse(top.begin(), top.end());
        std::rotate(bottom.begin(), bottom.begin() + 1, bottom.end());
        CHECK(tabloid_of(Tableau(top, bottom)) == tabloid_of(t));
    }
}

TEST_CASE("standard tableaux") {
    for (int n = 2; n <= 12; ++n) CHECK(standard_tableau_count(n, 1) == static_cast<std::uint64_t>(n - 1));
    CHECK(standard_tableau_count(4, 2) == 2);
    CHECK(standard_tableau_count(7, 0) == 1);
    CHECK_THROWS_AS(standard_tableau_count(5, 3), std::domain_error);

    for (int n = 1; n <= 12; ++n) {
        for (int l = 0; 2 * l <= n; ++l) {
            CHECK(standard_tableau_count(n, l) == binomial(n, l) - binomial(n, l - 1));
        }
    }

    for (auto const& t : standard_tableaux(6, 3)) {
        auto const& top = t.top_row();
        auto const& bottom = t.bottom_row();
        CHECK(std::is_sorted(top.begin(), top.end()));
        CHECK(std::is_sorted(bottom.begin(), bottom.end()));
        for (std::size_t k = 0; k < bottom.size(); ++k) CHECK(top[k] < bottom[k]);
    }
}
