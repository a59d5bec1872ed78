// Deterministic point-set generators. All randomness flows from the seed
// through a fixed mt19937_64 stream, so equal seeds give identical output on
// any platform.
#pragma once

#include <cstdint>
#include <string>

#include "balis/points.hpp"

namespace balis {

enum class Distribution { Uniform, PolygonTrap, Clusters };

Distribution parse_distribution(const std::string& name);

// red_fraction in [0, 1]; output always passes the general-position check.
ColoredPointSet generate(Distribution dist, int n, const Rat& red_fraction, std::uint64_t seed);

// The adversarial family: r red points near the vertices of a regular r-gon
// and b blue points clustered at its centre. n = r + b with b = n - ceil(n*f).
ColoredPointSet generate_polygon_trap(int red, int blue, std::uint64_t seed);

}  // namespace balis
