// Shared helpers for the test suites.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "balis/generator.hpp"
#include "balis/points.hpp"

namespace balis::test {

struct P {
    long x, y;
    char color;
};

inline ColoredPointSet make_set(const std::vector<P>& raw) {
    std::vector<ColoredPoint> pts;
    for (const auto& r : raw) {
        ColoredPoint p;
        p.x = BigInt(r.x);
        p.y = BigInt(r.y);
        p.color = r.color == 'R' ? Color::Red : Color::Blue;
        pts.push_back(std::move(p));
    }
    return ColoredPointSet::from_points(std::move(pts));
}

// The running 4-point example: two reds on the x-axis, two blues above/below.
inline ColoredPointSet four_point_example() {
    return make_set({{0, 0, 'R'}, {4, 0, 'R'}, {2, 3, 'B'}, {2, -3, 'B'}});
}

// Small random general-position set; deterministic per seed.
inline ColoredPointSet random_set(int n, std::uint64_t seed, long range = 1000) {
    std::mt19937_64 rng(seed);
    std::vector<ColoredPoint> pts;
    auto draw = [&](long r) {
        return static_cast<long>(rng() % (2 * static_cast<unsigned long>(r) + 1)) - r;
    };
    while (static_cast<int>(pts.size()) < n) {
        ColoredPoint p;
        p.x = BigInt(draw(range));
        p.y = BigInt(draw(range));
        p.color = (rng() & 1) ? Color::Red : Color::Blue;
        pts.push_back(std::move(p));
        auto ps = ColoredPointSet::from_points(pts);
        if (find_violation_fast(ps)) pts.pop_back();
    }
    return ColoredPointSet::from_points(std::move(pts));
}

}  // namespace balis::test
