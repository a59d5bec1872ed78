#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balis/errors.hpp"
#include "balis/island.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::four_point_example;
using balis::test::make_set;
using balis::test::random_set;

TEST_CASE("is_island basics") {
    auto ps = four_point_example();
    CHECK(is_island(ps, {0, 1, 2, 3}));  // everything
    CHECK(is_island(ps, std::vector<int>{}));
    auto trap = make_set({{0, 0, 'R'}, {4, 0, 'R'}, {2, 1, 'B'}, {2, 3, 'B'}});
    CHECK_FALSE(is_island(trap, {0, 1, 3}));  // (2,1) inside the triangle
    CHECK(is_island(trap, {0, 1, 2}));
    CHECK_THROWS_AS(is_island(trap, {0, 9}), input_error);
}

TEST_CASE("oracle_find examples") {
    auto ps = four_point_example();
    auto isl = oracle_find(ps, TargetCounts{1, 1});
    REQUIRE(isl);
    CHECK(isl->members == std::vector<int>{0, 2});  // lexicographically smallest

    auto full = oracle_find(ps, TargetCounts{2, 2});
    REQUIRE(full);
    CHECK(full->members == std::vector<int>{0, 1, 2, 3});

    auto empty = oracle_find(ps, TargetCounts{0, 0});
    REQUIRE(empty);
    CHECK(empty->members.empty());

    auto ps17 = random_set(17, 3);
    CHECK_THROWS_AS(oracle_find(ps17, TargetCounts{1, 1}), input_error);
    CHECK(oracle_find(ps17, TargetCounts{1, 1}, 20));  // cap override
}

TEST_CASE("oracle_enumerate examples") {
    auto ps = make_set({{0, 0, 'R'}, {4, 1, 'B'}, {1, 5, 'B'}});
    auto singles = oracle_enumerate(ps, TargetCounts{0, 1});
    CHECK(singles.size() == 2);  // every singleton is an island
    CHECK(singles[0].members == std::vector<int>{1});
    CHECK(singles[1].members == std::vector<int>{2});

    auto impossible = oracle_enumerate(ps, TargetCounts{2, 0});
    CHECK(impossible.empty());
}

TEST_CASE("oracle consistency: find vs enumerate, serial vs parallel") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        auto ps = random_set(9, seed);
        for (int rt = 0; rt <= ps.red_count; ++rt)
            for (int bt = 0; bt <= ps.blue_count; ++bt) {
                TargetCounts t{rt, bt};
                auto par = oracle_enumerate(ps, t);
                auto ser = oracle_enumerate_serial(ps, t);
                REQUIRE(par.size() == ser.size());
                for (std::size_t i = 0; i < par.size(); ++i)
                    CHECK(par[i].members == ser[i].members);
                // sorted, duplicate-free
                for (std::size_t i = 1; i < par.size(); ++i)
                    CHECK(par[i - 1].members < par[i].members);
                for (const auto& isl : par) {
                    CHECK(is_island(ps, isl));
                    CHECK(isl.red == rt);
                    CHECK(isl.blue == bt);
                }
                auto found = oracle_find(ps, t);
                CHECK(found.has_value() == !par.empty());
                if (found) CHECK(found->members == par.front().members);
            }
    }
}

TEST_CASE("theorem targets always feasible at desk scale") {
    // Case 1 for every alpha = j/12, and case 2, over random sets: the oracle
    // must always find an island (the theorems guarantee existence).
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        int n = 4 + static_cast<int>(seed % 7);
        auto ps = random_set(n, seed * 17 + 1);
        for (int j = 0; j <= 6; ++j) {
            Rat alpha(j, 12);
            alpha.canonicalize();
            TargetCounts t{
                static_cast<int>(ceil_scale(alpha, BigInt(ps.red_count)).get_si()),
                static_cast<int>(ceil_scale(alpha, BigInt(ps.blue_count)).get_si())};
            CHECK(oracle_find(ps, t).has_value());
        }
        if (ps.red_count >= 1 && ps.blue_count >= 1) {
            TargetCounts t2{(ps.red_count + 2) / 2, (ps.blue_count + 2) / 2};
            CHECK(oracle_find(ps, t2).has_value());
        }
    }
}

TEST_CASE("figure-one parameters: 9R+9B alpha=1/3 has a 3+3 island") {
    auto ps = random_set(18, 42);
    // recolor to exactly 9R + 9B
    auto pts = ps.points;
    for (int i = 0; i < 18; ++i)
        pts[static_cast<std::size_t>(i)].color = i < 9 ? Color::Red : Color::Blue;
    ps = ColoredPointSet::from_points(std::move(pts));
    auto islands = oracle_enumerate(ps, TargetCounts{3, 3}, 18);
    CHECK_FALSE(islands.empty());
}
