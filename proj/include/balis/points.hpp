// Bicolored point sets with exact integer coordinates.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "balis/numeric.hpp"

namespace balis {

enum class Color : std::uint8_t { Red, Blue };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

struct ColoredPoint {
    int id = 0;        // dense index 0..n-1
    BigInt x, y;       // exact integer coordinates
    Color color = Color::Red;
};

// A point with rational coordinates. Arises only as a derived object
// (arrangement cell samples, six-partition centers), never as input.
struct RatPoint {
    Rat x, y;
};

inline RatPoint to_rat(const ColoredPoint& p) { return RatPoint{Rat(p.x), Rat(p.y)}; }

struct ColoredPointSet {
    std::vector<ColoredPoint> points;
    int red_count = 0;
    int blue_count = 0;

    int size() const { return static_cast<int>(points.size()); }
    const ColoredPoint& operator[](int id) const { return points[static_cast<std::size_t>(id)]; }

    static ColoredPointSet from_points(std::vector<ColoredPoint> pts);
};

// Order by (x, y) lexicographically: the "sheared" left-to-right order the
// island-path machinery uses so that no two points tie.
bool shear_less(const ColoredPoint& a, const ColoredPoint& b);

// Point ids sorted by shear order.
std::vector<int> shear_order(const ColoredPointSet& ps);

struct GeneralPositionViolation {
    enum class Kind { DuplicatePoint, CollinearTriple } kind;
    int i = -1, j = -1, k = -1;  // offending ids; k unused for duplicates
    std::string describe() const;
};

// Exhaustive O(n^3) reference check, kept serial. Returns the
// lexicographically smallest violation, if any.
std::optional<GeneralPositionViolation> find_violation_serial(const ColoredPointSet& ps);

// Same contract, OpenMP-parallel over the outer triple index.
std::optional<GeneralPositionViolation> find_violation_parallel(const ColoredPointSet& ps);

// O(n^2 log n) check via duplicate slopes around each point. Decides the same
// predicate and names an offending triple, but not necessarily the smallest.
std::optional<GeneralPositionViolation> find_violation_fast(const ColoredPointSet& ps);

// ok iff all points distinct and no three collinear.
inline bool validate_general_position(const ColoredPointSet& ps) {
    return !find_violation_fast(ps).has_value();
}

}  // namespace balis
