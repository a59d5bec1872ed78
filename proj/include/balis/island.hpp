// Islands and the brute-force oracle that certifies every algorithm's output.
#pragma once

#include <optional>
#include <vector>

#include "balis/geom.hpp"
#include "balis/points.hpp"

namespace balis {

// A subset whose convex hull traps no other point of the parent set.
struct Island {
    std::vector<int> members;  // sorted ids
    int red = 0;
    int blue = 0;

    int size() const { return static_cast<int>(members.size()); }
    bool operator==(const Island& other) const { return members == other.members; }
};

struct TargetCounts {
    int red = 0;
    int blue = 0;
    int total() const { return red + blue; }
};

// Builds an Island value (sorts ids, counts colors). Throws on unknown ids.
Island make_island(const ColoredPointSet& ps, std::vector<int> members);

// True iff no point of P outside S lies in the closed convex hull of S.
bool is_island(const ColoredPointSet& ps, const std::vector<int>& members);

inline bool is_island(const ColoredPointSet& ps, const Island& island) {
    return is_island(ps, island.members);
}

inline constexpr int kOracleDefaultCap = 16;

// Lexicographically smallest island with exactly the target counts, if any.
// Enumeration is combinatorial; refuses sets larger than the cap.
std::optional<Island> oracle_find(const ColoredPointSet& ps, const TargetCounts& t,
                                  int cap = kOracleDefaultCap);

// All islands with the target counts, duplicate-free, lexicographically sorted.
std::vector<Island> oracle_enumerate(const ColoredPointSet& ps, const TargetCounts& t,
                                     int cap = kOracleDefaultCap);

// Serial reference for the parallel enumeration; identical output.
std::vector<Island> oracle_enumerate_serial(const ColoredPointSet& ps, const TargetCounts& t,
                                            int cap = kOracleDefaultCap);

}  // namespace balis
