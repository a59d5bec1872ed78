// Island paths: sequences of same-size islands where consecutive elements
// swap exactly one point, built by walking any island to an x-window and
// sliding along the x-sorted windows.
#pragma once

#include <functional>
#include <vector>

#include "balis/island.hpp"
#include "balis/points.hpp"

namespace balis {

// The k consecutive points starting at `start` in the sheared (x, y) order.
struct XWindow {
    int start = 0;
};

// All n-k+1 windows, left to right.
std::vector<XWindow> x_windows(const ColoredPointSet& ps, int k);

Island window_island(const ColoredPointSet& ps, int k, const XWindow& w);

struct IslandPath {
    std::vector<Island> islands;
    int size() const { return static_cast<int>(islands.size()); }
};

// Walk from the island to some x-window by repeatedly replacing the current
// rightmost point with the queued point nearest the ORIGINAL hull. Returns
// the materialized step sequence (starting with I itself) plus the window.
struct WalkResult {
    std::vector<Island> steps;
    XWindow window;
};
WalkResult walk_to_window(const ColoredPointSet& ps, const Island& island);

// Streaming variant: calls visit(red_count) for every island of the walk in
// order, starting with the island itself, without materializing members. If
// visit returns true the walk stops and that island's sorted members are
// written to out_members (if given). Returns the reached window start, or -1
// when stopped early.
int walk_to_window_stream(const ColoredPointSet& ps, const Island& island,
                          const std::function<bool(int)>& visit,
                          std::vector<int>* out_members = nullptr);

// Path I -> x-window -> x-window -> J with junction duplicates collapsed.
IslandPath island_path(const ColoredPointSet& ps, const Island& from, const Island& to);

}  // namespace balis
