// Exact-arithmetic geometric primitives: orientation, hulls, angular order,
// point/hull distances. Every decision here is an exact sign computation;
// no floating point anywhere.
#pragma once

#include <optional>
#include <vector>

#include "balis/numeric.hpp"
#include "balis/points.hpp"

namespace balis {

enum class Orientation : int { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

Orientation orient(const BigInt& ax, const BigInt& ay, const BigInt& bx, const BigInt& by,
                   const BigInt& cx, const BigInt& cy);

inline Orientation orient(const ColoredPoint& a, const ColoredPoint& b, const ColoredPoint& c) {
    return orient(a.x, a.y, b.x, b.y, c.x, c.y);
}

// Mixed form: rational apex against two integer points.
Orientation orient(const RatPoint& a, const ColoredPoint& b, const ColoredPoint& c);

Orientation orient(const RatPoint& a, const RatPoint& b, const RatPoint& c);

// Strictly convex CCW polygon over point ids of a parent set. Degenerate
// sizes 0 (empty), 1 (point) and 2 (segment) are first-class values.
struct ConvexPolygon {
    std::vector<int> vertex_ids;  // CCW
};

// Andrew monotone chain, O(m log m). Collinear points on the boundary are
// dropped so the result is strictly convex.
ConvexPolygon convex_hull(const ColoredPointSet& ps, const std::vector<int>& ids);

// Closed containment: boundary counts as inside. O(m) reference.
bool hull_contains_scan(const ColoredPointSet& ps, const ConvexPolygon& hull, const BigInt& qx,
                        const BigInt& qy);

// Same predicate in O(log m) via fan binary search.
bool hull_contains(const ColoredPointSet& ps, const ConvexPolygon& hull, const BigInt& qx,
                   const BigInt& qy);

// Exact squared distance from q to the closed region bounded by the hull
// (0 if inside). O(m) reference scan over all features.
Rat squared_distance_to_hull_scan(const ColoredPointSet& ps, const ConvexPolygon& hull,
                                  const ColoredPoint& q);

// Same value in O(log m): front-facing chain location + unimodal search.
Rat squared_distance_to_hull(const ColoredPointSet& ps, const ConvexPolygon& hull,
                             const ColoredPoint& q);

// Clockwise angular order of all points of P around the apex. The linear
// order starts at direction +x and sweeps clockwise; the circular sequence is
// what the sweep algorithms consume. Throws precondition_error("apex on
// line...") if two points are angularly equal from the apex.
std::vector<int> angular_order(const RatPoint& apex, const ColoredPointSet& ps);

// Comparator backing angular_order: true if the direction apex->lhs strictly
// precedes apex->rhs in the clockwise sweep from +x.
bool clockwise_less(const RatPoint& apex, const ColoredPoint& lhs, const ColoredPoint& rhs);

// ceil(alpha * m) in exact integer arithmetic; alpha must lie in [0, 1/2].
BigInt ceil_scale(const Rat& alpha, const BigInt& m);

}  // namespace balis
