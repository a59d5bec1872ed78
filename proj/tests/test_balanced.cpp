#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "balis/balanced.hpp"
#include "balis/generator.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::make_set;
using balis::test::random_set;

TEST_CASE("ceder point on a hexagon") {
    auto ps = make_set({{100, 0, 'R'}, {50, 87, 'B'}, {-50, 86, 'R'}, {-100, 1, 'B'},
                        {-50, -87, 'R'}, {50, -86, 'B'}});
    auto sp = ceder_point(ps);
    CHECK(verify_six_partition(ps, sp));
}

TEST_CASE("ceder point on random sets, exact region bound") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 1 + static_cast<int>((seed * 7) % 16);
        auto ps = random_set(n, seed * 97 + 31);
        auto sp = ceder_point(ps);
        std::string why;
        CHECK_MESSAGE(verify_six_partition(ps, sp, &why), why);
    }
    auto ps12 = random_set(12, 1234);
    auto sp12 = ceder_point(ps12);
    for (int c : sp12.region_counts) CHECK(c >= 1);  // 12/6 - 1

    auto ps60 = random_set(60, 4321);
    auto sp60 = ceder_point(ps60);
    for (int c : sp60.region_counts) CHECK(c >= 9);  // 60/6 - 1
}

TEST_CASE("pruned feasibility scan agrees with the cubic reference") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int n = 3 + static_cast<int>(seed % 10);
        auto ps = random_set(n, seed * 13 + 37);
        // probe a few candidate points, feasible or not
        for (long dx : {0L, 3L, -11L}) {
            RatPoint p{make_rat(2 * dx + 1, 2), make_rat(7 - dx, 3)};
            SixPartition a, b;
            bool fa = six_partition_feasible_at(ps, p, &a);
            bool fb = six_partition_feasible_at_brute(ps, p, &b);
            CHECK(fa == fb);
            if (fa) {
                CHECK(verify_six_partition(ps, a));
                CHECK(verify_six_partition(ps, b));
            }
        }
    }
}

TEST_CASE("wedge fan: all windows convex below n/3 at the ceder apex") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        int n = 9 + 3 * static_cast<int>(seed % 4);
        auto ps = random_set(n, seed * 103 + 41);
        auto sp = ceder_point(ps);
        for (int k = 1; 3 * k < n; ++k) {
            auto fan = wedge_fan(sp.center, ps, k);
            CHECK(count_convex_windows(fan) == n);
        }
    }
}

TEST_CASE("wedge fan: convex bound 2n-3k-3 in the mid range") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto ps = random_set(12, seed * 107 + 43);
        auto sp = ceder_point(ps);
        auto fan = wedge_fan(sp.center, ps, 5);
        CHECK(count_convex_windows(fan) >= 2 * 12 - 3 * 5 - 3);
    }
}

TEST_CASE("wedge fan zero-sum window invariant") {
    auto ps = random_set(14, 59);
    auto sp = ceder_point(ps);
    for (int k : {2, 5, 9}) {
        auto fan = wedge_fan(sp.center, ps, k);
        long sum = 0;
        for (int s = 0; s < fan.n; ++s) {
            int red = fan.window_red[static_cast<std::size_t>(s)];
            int blue = k - red;
            sum += static_cast<long>(red) * ps.blue_count - static_cast<long>(blue) * ps.red_count;
        }
        CHECK(sum == 0);
    }
}

TEST_CASE("fast precondition examples") {
    {
        // r = b = 30, alpha = 1/5: k = 12 against bound ~23.8
        auto ps = random_set(60, 777);
        auto pts = ps.points;
        for (int i = 0; i < 60; ++i)
            pts[static_cast<std::size_t>(i)].color = i < 30 ? Color::Red : Color::Blue;
        ps = ColoredPointSet::from_points(std::move(pts));
        auto pre = evaluate_fast_precondition(ps, Rat(1, 5));
        CHECK(pre.k == 12);
        CHECK(pre.satisfied);
    }
    {
        // alpha = 1/2 pushes k to ~n/2, far beyond the bound
        auto ps = random_set(40, 778);
        auto pre = evaluate_fast_precondition(ps, Rat(1, 2));
        CHECK_FALSE(pre.satisfied);
    }
}

TEST_CASE("fast balanced island on the 30+30 example") {
    auto ps = random_set(60, 991);
    auto pts = ps.points;
    for (int i = 0; i < 60; ++i)
        pts[static_cast<std::size_t>(i)].color = i < 30 ? Color::Red : Color::Blue;
    ps = ColoredPointSet::from_points(std::move(pts));
    FastDiagnostics diag;
    Certificate cert;
    Island isl = fast_balanced_island(ps, Rat(1, 5), &cert, &diag);
    CHECK(isl.red == 6);
    CHECK(isl.blue == 6);
    CHECK(is_island(ps, isl));
    CHECK(diag.fallback_count == 0);
}

TEST_CASE("fast balanced island: alpha zero gives the empty island") {
    auto ps = random_set(10, 321);
    Island isl = fast_balanced_island(ps, Rat(0));
    CHECK(isl.size() == 0);
}

TEST_CASE("fast path equals exact searches on small instances") {
    FastDiagnostics diag;
    int verified = 0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        int n = 6 + static_cast<int>(seed % 7);
        auto ps = random_set(n, seed * 131 + 47);
        for (int j = 0; j <= 6; ++j) {
            Rat alpha(j, 12);
            alpha.canonicalize();
            auto pre = evaluate_fast_precondition(ps, alpha);
            if (!pre.satisfied || pre.k == 0) continue;
            Island fast = fast_balanced_island(ps, alpha, nullptr, &diag);
            TargetCounts t = theorem_targets(ps, alpha, 1);
            CHECK(fast.red == t.red);
            CHECK(fast.blue == t.blue);
            CHECK(is_island(ps, fast));
            // exact families agree on feasibility for theorem targets
            BalancedQuery q;
            q.alpha = alpha;
            q.allow_fast = false;
            auto slow = balanced_island(ps, q);
            CHECK(slow.found);
            CHECK(slow.island.red == t.red);
            CHECK(slow.island.blue == t.blue);
            verified++;
        }
    }
    CHECK(diag.fallback_count == 0);
    CHECK(verified >= 30);
}

TEST_CASE("balanced island: figure-one parameters") {
    auto ps = random_set(18, 4242);
    auto pts = ps.points;
    for (int i = 0; i < 18; ++i)
        pts[static_cast<std::size_t>(i)].color = i < 9 ? Color::Red : Color::Blue;
    ps = ColoredPointSet::from_points(std::move(pts));
    BalancedQuery q;
    q.alpha = Rat(1, 3);
    auto res = balanced_island(ps, q);
    CHECK(res.found);
    CHECK(res.island.red == 3);
    CHECK(res.island.blue == 3);
}

TEST_CASE("balanced island: ham-sandwich scale") {
    auto ps = make_set({{0, 0, 'R'}, {10, 1, 'R'}, {4, 8, 'B'}, {6, -7, 'B'}});
    BalancedQuery q;
    q.alpha = Rat(1, 2);
    auto res = balanced_island(ps, q);
    CHECK(res.found);
    CHECK(res.island.red == 1);
    CHECK(res.island.blue == 1);
}

TEST_CASE("balanced island case 2 on the pentagon trap") {
    auto ps = generate_polygon_trap(5, 4, 11);
    REQUIRE(ps.red_count == 5);
    REQUIRE(ps.blue_count == 4);
    BalancedQuery q;
    q.theorem_case = 2;
    auto res = balanced_island(ps, q);
    CHECK(res.found);
    CHECK(res.island.red == 3);
    CHECK(res.island.blue == 3);
    CHECK(res.certificate.family == CertFamily::Strip);

    // the motivating gap: no island with 4 reds and fewer than 4 blues
    for (int blues = 0; blues < 4; ++blues)
        CHECK(oracle_enumerate(ps, TargetCounts{4, blues}).empty());
}

TEST_CASE("balanced island auto never fails on theorem targets") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        int n = 4 + static_cast<int>(seed % 8);
        auto ps = random_set(n, seed * 151 + 53);
        for (int j = 0; j <= 6; j += 2) {
            Rat alpha(j, 12);
            alpha.canonicalize();
            for (bool allow_fast : {false, true}) {
                BalancedQuery q;
                q.alpha = alpha;
                q.allow_fast = allow_fast;
                auto res = balanced_island(ps, q);
                CHECK(res.found);
                auto t = theorem_targets(ps, alpha, 1);
                CHECK(res.island.red == t.red);
                CHECK(res.island.blue == t.blue);
            }
        }
        if (ps.red_count >= 1 && ps.blue_count >= 1) {
            BalancedQuery q2;
            q2.theorem_case = 2;
            auto res2 = balanced_island(ps, q2);
            CHECK(res2.found);
        }
    }
}

TEST_CASE("balanced island brute mode") {
    auto ps = balis::test::four_point_example();
    BalancedQuery q;
    q.algorithm = Algorithm::Brute;
    q.alpha = Rat(1, 2);
    auto res = balanced_island(ps, q);
    CHECK(res.found);
    CHECK(res.certificate.family == CertFamily::Oracle);
    CHECK(res.island.members == std::vector<int>{0, 2});
}

TEST_CASE("theorem targets validation") {
    auto ps = make_set({{0, 0, 'R'}, {1, 2, 'R'}, {5, 3, 'R'}});
    CHECK_THROWS_AS(theorem_targets(ps, Rat(0), 2), input_error);  // no blue points
    CHECK_THROWS_AS(theorem_targets(ps, Rat(0), 3), input_error);
}
