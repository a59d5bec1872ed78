// Strip search: rotate the projection axis through all pair-slope events,
// maintaining the linear order of projections and the n-k+1 sliding windows.
#pragma once

#include <optional>
#include <vector>

#include "balis/island.hpp"
#include "balis/points.hpp"

namespace balis {

struct SlopeEvent {
    int i = -1, j = -1;  // the pair that swaps
};

// Region between the two lines through points u and w orthogonal to the axis
// direction d, closed on both sides.
struct Strip {
    BigInt dir_x, dir_y;  // projection axis d (integer vector)
    int first_id = -1;    // u
    int last_id = -1;     // w
};

bool strip_contains(const ColoredPointSet& ps, const Strip& s, int point_id);

// Points of P inside the closed strip, as an island.
Island strip_to_island(const ColoredPointSet& ps, const Strip& s);

// All C(n,2) swap events sorted by the slope of the line through the pair
// (vertical slopes last); equal slopes tie-broken lexicographically.
std::vector<SlopeEvent> slope_events(const ColoredPointSet& ps);

struct ProjectionOrder {
    int k = 0;
    int n = 0;
    std::vector<int> order;       // ascending projection along the current axis
    std::vector<int> pos;
    std::vector<int> window_red;  // n-k+1 contiguous windows by start index
    std::optional<int> target_red;
    int hits = 0;

    int window_count() const { return n - k + 1; }
    bool window_hit(int s) const {
        return target_red && window_red[static_cast<std::size_t>(s)] == *target_red;
    }
    int first_hit() const;
};

// Order along the symbolic initial axis (just steeper than horizontal):
// ascending (x, y) lexicographic.
ProjectionOrder initial_order(const ColoredPointSet& ps, int k,
                              std::optional<int> target_red = std::nullopt);

// Order along an explicit axis; throws if two points project equally.
std::vector<int> order_along(const ColoredPointSet& ps, const BigInt& dx, const BigInt& dy);

// Swap positions of the event pair (they must be adjacent) and update the
// two affected window counts. Returns the window start indices whose counts
// changed (at most two).
std::vector<int> advance(ProjectionOrder& order, const ColoredPointSet& ps, const SlopeEvent& e);

// Projection axis realizing the symbolic position "strictly after the first
// `processed` events": a mediant between the neighbouring event slopes.
std::pair<BigInt, BigInt> axis_after(const ColoredPointSet& ps,
                                     const std::vector<SlopeEvent>& events, int processed);

struct StripSearchStats {
    long events_processed = 0;
    long hits = 0;
};

// The O(n^2 log n) search. Candidate windows are inspected at the initial
// order and after every full group of equal-slope events; any reported strip
// is re-verified by direct dot-product containment.
std::optional<Strip> strip_search(const ColoredPointSet& ps, const TargetCounts& t,
                                  StripSearchStats* stats = nullptr, bool exhaustive = false);

}  // namespace balis
