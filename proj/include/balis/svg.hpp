#pragma once

#include <string>

#include "balis/record.hpp"

namespace balis {

// Static SVG 1.1 document: colored points, the island hull outline, and the
// certificate geometry (wedge rays or strip boundaries) clipped to the view.
std::string render_svg(const ColoredPointSet& ps, const ResultRecord& rec);

}  // namespace balis
