#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "balis/errors.hpp"
#include "balis/generator.hpp"
#include "balis/pointfile.hpp"
#include "balis/record.hpp"
#include "balis/svg.hpp"
#include "test_util.hpp"

using namespace balis;
using balis::test::make_set;

TEST_CASE("rational parse and format") {
    CHECK(rat_to_string(Rat(1, 3)) == "1/3");
    CHECK(rat_to_string(Rat(4)) == "4/1");
    CHECK(*parse_rat("2/6") == Rat(1, 3));
    CHECK(*parse_rat("-7") == Rat(-7));
    CHECK(*parse_rat("0/5") == Rat(0));
    CHECK_FALSE(parse_rat("1/0"));
    CHECK_FALSE(parse_rat("a/b"));
    CHECK_FALSE(parse_rat(""));
}

TEST_CASE("point file round trip") {
    auto ps = generate(Distribution::Uniform, 20, Rat(1, 2), 99);
    std::string text = serialize_point_file(ps);
    auto back = parse_point_file(text);
    REQUIRE(back.size() == ps.size());
    for (int i = 0; i < ps.size(); ++i) {
        CHECK(cmp(back[i].x, ps[i].x) == 0);
        CHECK(cmp(back[i].y, ps[i].y) == 0);
        CHECK(back[i].color == ps[i].color);
    }
    CHECK(serialize_point_file(back) == text);
}

TEST_CASE("point file parsing tolerates comments, blanks and CRLF") {
    std::string text = "# header\r\n\r\n1 2 R\r\n  \n3 4 B # trailing comment\n";
    auto ps = parse_point_file(text);
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].color == Color::Red);
    CHECK(ps[1].color == Color::Blue);
}

TEST_CASE("point file errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_point_file(std::string("1 2 R\n3 4\n")),
                         doctest::Contains("line 2"), input_error);
    CHECK_THROWS_WITH_AS(parse_point_file(std::string("1 2 G\n")), doctest::Contains("line 1"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_point_file(std::string("x 2 R\n")), doctest::Contains("line 1"),
                         input_error);
}

TEST_CASE("generator determinism and validity") {
    for (auto dist : {Distribution::Uniform, Distribution::Clusters}) {
        auto a = generate(dist, 30, Rat(1, 3), 123);
        auto b = generate(dist, 30, Rat(1, 3), 123);
        CHECK(serialize_point_file(a) == serialize_point_file(b));
        CHECK_FALSE(find_violation_fast(a));
        CHECK(a.red_count == 10);
    }
    auto trap = generate(Distribution::PolygonTrap, 9, Rat(5, 9), 7);
    CHECK(trap.red_count == 5);
    CHECK(trap.blue_count == 4);
    CHECK_FALSE(find_violation_fast(trap));
}

TEST_CASE("json record schema") {
    auto ps = balis::test::four_point_example();
    ResultRecord rec;
    rec.alpha = Rat(1, 2);
    rec.theorem_case = 1;
    rec.algorithm = "auto";
    rec.targets = TargetCounts{1, 1};
    rec.found = true;
    rec.island = make_island(ps, {0, 2});
    rec.certificate.family = CertFamily::Wedge;
    rec.certificate.wedge = Wedge{RatPoint{Rat(1, 3), Rat(2, 7)}, 0, 2};
    rec.timing_ms = 1.5;

    auto j = record_to_json(ps, rec);
    CHECK(j["query"]["alpha"] == "1/2");
    CHECK(j["query"]["r_target"] == 1);
    CHECK(j["found"] == true);
    CHECK(j["island"]["members"] == std::vector<int>{0, 2});
    CHECK(j["certificate"]["family"] == "wedge");
    // exact rationals as num/den strings, never floats
    CHECK(j["certificate"]["apex"]["x"] == "1/3");
    CHECK(j["certificate"]["apex"]["y"] == "2/7");

    // emission re-verifies the island
    auto trap = make_set({{0, 0, 'R'}, {4, 0, 'R'}, {2, 1, 'B'}, {2, 3, 'B'}});
    ResultRecord bad;
    bad.algorithm = "auto";
    bad.found = true;
    bad.island = make_island(trap, {0, 1, 3});  // hull traps point 2
    CHECK_THROWS_AS(record_to_json(trap, bad), internal_error);
}

TEST_CASE("svg output shape") {
    auto ps = balis::test::four_point_example();
    ResultRecord rec;
    rec.algorithm = "auto";
    rec.found = false;
    auto svg = render_svg(ps, rec);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("viewBox") != std::string::npos);
    // four point circles
    std::size_t count = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        count++;
        pos++;
    }
    CHECK(count == 4);

    rec.found = true;
    rec.island = make_island(ps, {0, 2});
    rec.certificate.family = CertFamily::Strip;
    Strip s;
    s.dir_x = BigInt(7);
    s.dir_y = BigInt(1);
    s.first_id = 0;
    s.last_id = 2;
    rec.certificate.strip = s;
    auto svg2 = render_svg(ps, rec);
    CHECK(svg2.find("<polygon") != std::string::npos);  // island hull
    CHECK(svg2.find("<line") != std::string::npos);     // strip boundaries
}
