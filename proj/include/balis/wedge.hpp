// Wedge search over the line arrangement: maintain the n circular k-point
// windows around a cell sample apex, updating in O(1) per crossed line.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "balis/arrangement.hpp"
#include "balis/geom.hpp"
#include "balis/island.hpp"

namespace balis {

// Closed region swept clockwise from ray apex->first to ray apex->last.
// first == last is the degenerate one-ray wedge; first == -1 the empty wedge.
struct Wedge {
    RatPoint apex;
    int first_id = -1;
    int last_id = -1;
};

bool wedge_contains(const ColoredPointSet& ps, const Wedge& w, int point_id);

// Points of P in the closed wedge, as an island.
Island wedge_to_island(const ColoredPointSet& ps, const Wedge& w);

// Sign provider for orient(apex, u, w) queries at the current apex. The DFS
// backs this with a per-line sign vector so updates cost O(1) integer work.
using OrientFn = std::function<Orientation(int u, int w)>;

OrientFn rational_orient_fn(const ColoredPointSet& ps, const RatPoint& apex);

struct AngularState {
    int k = 0;
    int n = 0;
    std::vector<int> order;            // clockwise circular sequence of ids
    std::vector<int> pos;              // inverse of order
    std::vector<int> window_red;       // indexed by start position
    std::vector<std::uint8_t> window_convex;
    std::optional<int> target_red;     // when set, hits counts matching windows
    int hits = 0;

    int window_first(int s) const { return order[static_cast<std::size_t>(s)]; }
    int window_last(int s) const {
        return order[static_cast<std::size_t>((s + k - 1) % n)];
    }
    bool window_hit(int s) const {
        return target_red && window_convex[static_cast<std::size_t>(s)] &&
               window_red[static_cast<std::size_t>(s)] == *target_red;
    }
    // First hit window's start position, or -1.
    int first_hit() const;
};

// Builds order, window counts and convex flags in O(n log n).
AngularState init_state(const RatPoint& apex, const ColoredPointSet& ps, int k,
                        const OrientFn& orient_fn, std::optional<int> target_red = std::nullopt);

// Apex crossed the line through (a, b). `inside_segment` selects between the
// two crossing types: outside the segment transposes a and b (they must be
// angularly adjacent); inside flips the convexity of the windows spanned
// exactly by {a, b}. The orient_fn must already reflect the new apex side.
void cross_line(AngularState& state, const ColoredPointSet& ps, int a, int b, bool inside_segment,
                const OrientFn& orient_fn);

// Rotation-invariant equality of two states (orders may start anywhere).
bool states_equivalent(const AngularState& lhs, const AngularState& rhs);

struct WedgeSearchStats {
    long cells_visited = 0;
    long hits = 0;
};

// Observer invoked on every visited cell with the incremental state; used by
// the incremental-equals-from-scratch verification.
using CellObserver = std::function<void(int face, const AngularState&)>;

// The O(n^4) search. Returns a verified wedge whose window matches the
// targets, or nullopt if no cell admits one. k = 0 short-circuits to the
// trivial empty wedge. With `exhaustive`, traverses every cell and counts
// hits instead of stopping at the first.
std::optional<Wedge> wedge_search(const ColoredPointSet& ps, const TargetCounts& t,
                                  WedgeSearchStats* stats = nullptr, bool exhaustive = false,
                                  const CellObserver& on_cell = {});

// Independent completeness check: scans every arrangement cell from scratch
// (no incremental state) and reports whether any convex window matches.
bool wedge_cell_scan_finds(const ColoredPointSet& ps, const TargetCounts& t);

}  // namespace balis
