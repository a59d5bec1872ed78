#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "balis/errors.hpp"
#include "balis/geom.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::make_set;
using balis::test::random_set;

namespace {

Orientation orient_pts(const ColoredPointSet& ps, int a, int b, int c) {
    return orient(ps[a], ps[b], ps[c]);
}

}  // namespace

TEST_CASE("orient basic examples") {
    auto ps = make_set({{0, 0, 'R'}, {1, 0, 'R'}, {0, 1, 'R'}, {1, 1, 'R'}, {2, 2, 'R'}});
    CHECK(orient_pts(ps, 0, 1, 2) == Orientation::CounterClockwise);
    CHECK(orient_pts(ps, 0, 3, 4) == Orientation::Collinear);
    CHECK(orient_pts(ps, 0, 2, 3) == Orientation::Clockwise);
}

TEST_CASE("orient antisymmetry over random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        long c[6];
        for (auto& v : c) v = static_cast<long>(rng() % 2001) - 1000;
        BigInt ax(c[0]), ay(c[1]), bx(c[2]), by(c[3]), cx(c[4]), cy(c[5]);
        Orientation o1 = orient(ax, ay, bx, by, cx, cy);
        Orientation o2 = orient(bx, by, ax, ay, cx, cy);
        if (o1 == Orientation::Collinear)
            CHECK(o2 == Orientation::Collinear);
        else
            CHECK(static_cast<int>(o1) == -static_cast<int>(o2));
        // cyclic invariance
        CHECK(orient(bx, by, cx, cy, ax, ay) == o1);
    }
}

TEST_CASE("ceil_scale examples and properties") {
    CHECK(ceil_scale(Rat(1, 3), BigInt(9)) == 3);
    CHECK(ceil_scale(Rat(0), BigInt(7)) == 0);
    CHECK(ceil_scale(Rat(2, 5), BigInt(7)) == 3);
    CHECK_THROWS_AS(ceil_scale(Rat(3, 5), BigInt(7)), input_error);
    CHECK_THROWS_AS(ceil_scale(Rat(-1, 5), BigInt(7)), input_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        long num = static_cast<long>(rng() % 1000);
        long den = 2 * num + 1 + static_cast<long>(rng() % 1000);  // alpha < 1/2
        long m = static_cast<long>(rng() % 500);
        Rat alpha = make_rat(num, den);
        BigInt v = ceil_scale(alpha, BigInt(m));
        // v - 1 < alpha*m <= v, cross-multiplied
        CHECK(cmp((v - 1) * den, BigInt(num * m)) < 0);
        CHECK(cmp(v * den, BigInt(num * m)) >= 0);
    }
}

TEST_CASE("convex hull examples") {
    auto tri = make_set({{0, 0, 'R'}, {4, 0, 'R'}, {2, 3, 'B'}});
    auto hull = convex_hull(tri, {0, 1, 2});
    CHECK(hull.vertex_ids.size() == 3);

    auto with_interior = make_set({{0, 0, 'R'}, {4, 0, 'R'}, {2, 1, 'B'}, {2, 3, 'B'}});
    auto hull2 = convex_hull(with_interior, {0, 1, 2, 3});
    CHECK(hull2.vertex_ids.size() == 3);
    CHECK(std::find(hull2.vertex_ids.begin(), hull2.vertex_ids.end(), 2) ==
          hull2.vertex_ids.end());
    // the dropped point is inside the hull
    CHECK(hull_contains(with_interior, hull2, with_interior[2].x, with_interior[2].y));

    auto single = make_set({{0, 0, 'R'}});
    CHECK(convex_hull(single, {0}).vertex_ids.size() == 1);
}

TEST_CASE("hull contains every input point") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto ps = random_set(14, seed);
        std::vector<int> ids;
        for (int i = 0; i < ps.size(); ++i) ids.push_back(i);
        auto hull = convex_hull(ps, ids);
        for (int i = 0; i < ps.size(); ++i) {
            CHECK(hull_contains(ps, hull, ps[i].x, ps[i].y));
            CHECK(hull_contains_scan(ps, hull, ps[i].x, ps[i].y));
        }
    }
}

TEST_CASE("hull containment: log version equals scan") {
    std::mt19937_64 rng(23);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto ps = random_set(20, seed, 60);
        std::vector<int> ids;
        for (int i = 0; i < ps.size(); ++i) ids.push_back(i);
        auto hull = convex_hull(ps, ids);
        for (int trial = 0; trial < 400; ++trial) {
            BigInt qx(static_cast<long>(rng() % 241) - 120);
            BigInt qy(static_cast<long>(rng() % 241) - 120);
            CHECK(hull_contains(ps, hull, qx, qy) == hull_contains_scan(ps, hull, qx, qy));
        }
    }
}

TEST_CASE("angular order of the 4-point example") {
    auto ps = balis::test::four_point_example();
    RatPoint apex{Rat(2), Rat(0)};
    auto order = angular_order(apex, ps);
    REQUIRE(order.size() == 4);
    // clockwise (2,3),(4,0),(2,-3),(0,0) up to rotation
    std::vector<int> expect = {2, 1, 3, 0};
    int offset = -1;
    for (int i = 0; i < 4; ++i)
        if (order[static_cast<std::size_t>(i)] == expect[0]) offset = i;
    REQUIRE(offset >= 0);
    for (int i = 0; i < 4; ++i)
        CHECK(order[static_cast<std::size_t>((offset + i) % 4)] ==
              expect[static_cast<std::size_t>(i)]);
}

TEST_CASE("angular order invariant under positive scaling") {
    for (std::uint64_t seed = 2; seed <= 6; ++seed) {
        auto ps = random_set(9, seed, 50);
        RatPoint apex{Rat(1, 3), Rat(1, 7)};  // denominators dodge input lines
        auto base = angular_order(apex, ps);

        std::vector<ColoredPoint> scaled;
        for (const auto& p : ps.points) {
            ColoredPoint q = p;
            q.x = p.x * 13;
            q.y = p.y * 13;
            scaled.push_back(std::move(q));
        }
        auto ps2 = ColoredPointSet::from_points(std::move(scaled));
        RatPoint apex2{apex.x * 13, apex.y * 13};
        auto after = angular_order(apex2, ps2);
        CHECK(base == after);  // same starting rule, same circular order
    }
}

TEST_CASE("angular order rejects apex on a line through two points") {
    auto ps = make_set({{0, 0, 'R'}, {2, 2, 'B'}, {5, 1, 'R'}});
    RatPoint apex{Rat(4), Rat(4)};  // on the line through (0,0),(2,2), outside the segment
    CHECK_THROWS_AS(angular_order(apex, ps), precondition_error);
}

TEST_CASE("squared distance to hull examples") {
    auto tri = make_set(
        {{0, 0, 'R'}, {4, 0, 'R'}, {2, 3, 'B'}, {2, 1, 'B'}, {5, 0, 'B'}, {2, 4, 'B'}});
    auto hull = convex_hull(tri, {0, 1, 2});
    CHECK(squared_distance_to_hull(tri, hull, tri[3]) == Rat(0));  // inside
    CHECK(squared_distance_to_hull(tri, hull, tri[4]) == Rat(1));  // right of (4,0)
    CHECK(squared_distance_to_hull(tri, hull, tri[5]) == Rat(1));  // nearest feature is (2,3)

    auto seg = make_set({{0, 0, 'R'}, {4, 0, 'R'}, {5, 0, 'B'}});
    auto seg_hull = convex_hull(seg, {0, 1});
    CHECK(squared_distance_to_hull(seg, seg_hull, seg[2]) == Rat(1));

    CHECK_THROWS_AS(squared_distance_to_hull(tri, ConvexPolygon{}, tri[0]), precondition_error);
}

TEST_CASE("squared distance: log version equals scan, zero iff inside") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto ps = random_set(40, seed, 200);
        std::vector<int> ids;
        for (int i = 0; i < 30; ++i) ids.push_back(i);
        auto hull = convex_hull(ps, ids);
        REQUIRE(hull.vertex_ids.size() >= 6);
        for (int q = 0; q < ps.size(); ++q) {
            Rat fast = squared_distance_to_hull(ps, hull, ps[q]);
            Rat slow = squared_distance_to_hull_scan(ps, hull, ps[q]);
            CHECK(fast == slow);
            CHECK((sign(fast) == 0) == hull_contains(ps, hull, ps[q].x, ps[q].y));
        }
    }
}

TEST_CASE("squared distance stress against scan on larger hulls") {
    std::mt19937_64 rng(77);
    for (int round = 0; round < 6; ++round) {
        // Points on a wide ellipse-ish ring make many-vertex hulls.
        std::vector<ColoredPoint> pts;
        int m = 40 + round * 10;
        for (int i = 0; i < m; ++i) {
            double ang = 2 * 3.14159265358979 * i / m;
            ColoredPoint p;
            long sx = static_cast<long>(rng() % 7) - 3;
            long sy = static_cast<long>(rng() % 7) - 3;
            p.x = BigInt(static_cast<long>(100000 * std::cos(ang)) + sx);
            p.y = BigInt(static_cast<long>(60000 * std::sin(ang)) + sy);
            p.color = Color::Red;
            pts.push_back(std::move(p));
        }
        // queries scattered inside, outside, near edges
        for (int q = 0; q < 60; ++q) {
            ColoredPoint query;
            query.x = BigInt(static_cast<long>(rng() % 400001) - 200000);
            query.y = BigInt(static_cast<long>(rng() % 400001) - 200000);
            query.color = Color::Blue;
            pts.push_back(std::move(query));
        }
        auto ps = ColoredPointSet::from_points(std::move(pts));
        std::vector<int> hull_ids;
        for (int i = 0; i < m; ++i) hull_ids.push_back(i);
        auto hull = convex_hull(ps, hull_ids);
        REQUIRE(hull.vertex_ids.size() >= 10);
        for (int q = m; q < ps.size(); ++q)
            CHECK(squared_distance_to_hull(ps, hull, ps[q]) ==
                  squared_distance_to_hull_scan(ps, hull, ps[q]));
    }
}
