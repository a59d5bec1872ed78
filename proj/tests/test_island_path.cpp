#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "balis/errors.hpp"
#include "balis/island_path.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::make_set;
using balis::test::random_set;

namespace {

int symmetric_difference(const Island& a, const Island& b) {
    std::vector<int> diff;
    std::set_symmetric_difference(a.members.begin(), a.members.end(), b.members.begin(),
                                  b.members.end(), std::back_inserter(diff));
    return static_cast<int>(diff.size());
}

void check_path_invariants(const ColoredPointSet& ps, const IslandPath& path, const Island& from,
                           const Island& to) {
    REQUIRE(path.size() >= 1);
    CHECK(path.islands.front() == from);
    CHECK(path.islands.back() == to);
    CHECK(path.size() <= 3 * ps.size() + 3);
    for (const auto& isl : path.islands) {
        CHECK(isl.size() == from.size());
        CHECK(is_island(ps, isl));
    }
    for (int i = 1; i < path.size(); ++i) {
        CHECK(symmetric_difference(path.islands[static_cast<std::size_t>(i - 1)],
                                   path.islands[static_cast<std::size_t>(i)]) == 2);
        CHECK(std::abs(path.islands[static_cast<std::size_t>(i - 1)].red -
                       path.islands[static_cast<std::size_t>(i)].red) <= 1);
    }
}

}  // namespace

TEST_CASE("x_windows counts and island property") {
    auto ps = balis::test::four_point_example();
    CHECK(x_windows(ps, 2).size() == 3);
    CHECK(x_windows(ps, 4).size() == 1);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        auto rps = random_set(n, seed * 29 + 19);
        for (int k = 1; k <= n; ++k)
            for (const auto& w : x_windows(rps, k))
                CHECK(is_island(rps, window_island(rps, k, w)));
    }
}

TEST_CASE("walk from an x-window has length one") {
    auto ps = random_set(9, 3);
    auto w = window_island(ps, 3, XWindow{2});
    auto res = walk_to_window(ps, w);
    CHECK(res.steps.size() == 1);
    CHECK(res.window.start == 2);
}

TEST_CASE("walk from a singleton has length one") {
    auto ps = random_set(7, 5);
    auto res = walk_to_window(ps, make_island(ps, {3}));
    CHECK(res.steps.size() == 1);
}

TEST_CASE("walk steps are islands with symmetric difference two") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);  // up to 12
        auto ps = random_set(n, seed * 41 + 23);
        auto islands = oracle_enumerate(ps, TargetCounts{std::min(2, ps.red_count),
                                                         std::min(1, ps.blue_count)});
        for (std::size_t idx = 0; idx < islands.size() && idx < 4; ++idx) {
            auto res = walk_to_window(ps, islands[idx]);
            for (std::size_t i = 0; i < res.steps.size(); ++i) {
                CHECK(is_island(ps, res.steps[i]));
                if (i > 0)
                    CHECK(symmetric_difference(res.steps[i - 1], res.steps[i]) == 2);
            }
            CHECK(static_cast<int>(res.steps.size()) <= n + 1);
            // final element is the window
            auto win = window_island(ps, islands[idx].size(), res.window);
            CHECK(res.steps.back() == win);
        }
    }
}

TEST_CASE("island_path trivial cases") {
    auto ps = random_set(8, 7);
    auto isl = make_island(ps, {1, 4});
    if (is_island(ps, isl)) {
        auto path = island_path(ps, isl, isl);
        CHECK(path.size() == 1);
    }
    CHECK_THROWS_AS(island_path(ps, make_island(ps, {0}), make_island(ps, {0, 1})),
                    precondition_error);
}

TEST_CASE("island_path between two x-windows is the window walk") {
    auto ps = random_set(10, 9);
    const int k = 3;
    auto a = window_island(ps, k, XWindow{1});
    auto b = window_island(ps, k, XWindow{5});
    auto path = island_path(ps, a, b);
    CHECK(path.size() == 5);  // 5 - 1 + 1
    check_path_invariants(ps, path, a, b);
}

TEST_CASE("island_path invariants over random island pairs") {
    int pairs_checked = 0;
    for (std::uint64_t seed = 1; seed <= 14; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);  // up to 12
        auto ps = random_set(n, seed * 61 + 29);
        int rt = std::min(1 + static_cast<int>(seed % 2), ps.red_count);
        int bt = std::min(1, ps.blue_count);
        auto islands = oracle_enumerate(ps, TargetCounts{rt, bt});
        if (islands.size() < 2) continue;
        for (std::size_t i = 0; i < islands.size() && i < 3; ++i)
            for (std::size_t j = islands.size() - 1; j > islands.size() - 3 && j > i; --j) {
                auto path = island_path(ps, islands[i], islands[j]);
                check_path_invariants(ps, path, islands[i], islands[j]);
                pairs_checked++;
            }
    }
    CHECK(pairs_checked >= 20);
}

TEST_CASE("streaming walk matches the materialized walk") {
    auto ps = random_set(11, 13);
    auto islands = oracle_enumerate(ps, TargetCounts{2, 1});
    REQUIRE_FALSE(islands.empty());
    const auto& isl = islands.front();
    auto res = walk_to_window(ps, isl);
    std::vector<int> reds;
    int window = walk_to_window_stream(ps, isl, [&](int red) {
        reds.push_back(red);
        return false;
    });
    CHECK(window == res.window.start);
    REQUIRE(reds.size() == res.steps.size());
    for (std::size_t i = 0; i < reds.size(); ++i)
        CHECK(reds[i] == res.steps[i].red);

    // early stop materializes the right island
    if (res.steps.size() >= 2) {
        std::vector<int> members;
        int count = 0;
        int rc = walk_to_window_stream(
            ps, isl, [&](int) { return ++count == 2; }, &members);
        CHECK(rc == -1);
        CHECK(members == res.steps[1].members);
    }
}
