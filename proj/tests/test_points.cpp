#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balis/points.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::make_set;
using balis::test::random_set;

TEST_CASE("general position: valid example") {
    auto ps = balis::test::four_point_example();
    CHECK_FALSE(find_violation_serial(ps));
    CHECK_FALSE(find_violation_parallel(ps));
    CHECK_FALSE(find_violation_fast(ps));
}

TEST_CASE("general position: collinear triple is named") {
    auto ps = make_set({{0, 0, 'R'}, {1, 1, 'R'}, {2, 2, 'B'}, {5, 0, 'B'}});
    auto v = find_violation_serial(ps);
    REQUIRE(v);
    CHECK(v->kind == GeneralPositionViolation::Kind::CollinearTriple);
    CHECK(v->i == 0);
    CHECK(v->j == 1);
    CHECK(v->k == 2);
    CHECK(v->describe() == "CollinearTriple(0,1,2)");
    auto vp = find_violation_parallel(ps);
    REQUIRE(vp);
    CHECK(vp->i == 0);
    CHECK(vp->j == 1);
    CHECK(vp->k == 2);
    CHECK(find_violation_fast(ps));
}

TEST_CASE("general position: empty and duplicate") {
    ColoredPointSet empty;
    CHECK_FALSE(find_violation_serial(empty));
    auto dup = make_set({{3, 4, 'R'}, {1, 2, 'B'}, {3, 4, 'B'}});
    auto v = find_violation_fast(dup);
    REQUIRE(v);
    CHECK(v->kind == GeneralPositionViolation::Kind::DuplicatePoint);
    CHECK(v->i == 0);
    CHECK(v->j == 2);
}

TEST_CASE("general position: serial, parallel and fast agree") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto ps = random_set(12, seed, 400);
        bool clean_serial = !find_violation_serial(ps);
        bool clean_parallel = !find_violation_parallel(ps);
        bool clean_fast = !find_violation_fast(ps);
        CHECK(clean_serial);
        CHECK(clean_parallel);
        CHECK(clean_fast);

        // inject a collinear triple and recheck
        auto pts = ps.points;
        ColoredPoint mid;
        mid.x = 2 * pts[3].x - pts[5].x;  // reflection keeps collinearity exact
        mid.y = 2 * pts[3].y - pts[5].y;
        mid.color = Color::Red;
        pts.push_back(std::move(mid));
        auto bad = ColoredPointSet::from_points(std::move(pts));
        auto s = find_violation_serial(bad);
        auto p = find_violation_parallel(bad);
        auto f = find_violation_fast(bad);
        REQUIRE(s);
        REQUIRE(p);
        REQUIRE(f);
        CHECK(s->i == p->i);
        CHECK(s->j == p->j);
        CHECK(s->k == p->k);
    }
}

TEST_CASE("shear order sorts by (x, y)") {
    auto ps = make_set({{2, 5, 'R'}, {2, -1, 'B'}, {0, 9, 'R'}, {7, 0, 'B'}});
    auto order = shear_order(ps);
    CHECK(order == std::vector<int>{2, 1, 0, 3});
}
