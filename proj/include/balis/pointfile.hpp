// Point file I/O: lines of "x y color" with '#' comments; LF or CRLF.
#pragma once

#include <iosfwd>
#include <string>

#include "balis/points.hpp"

namespace balis {

// Parses a point file; throws input_error with a line number on bad input.
ColoredPointSet parse_point_file(std::istream& in);
ColoredPointSet parse_point_file(const std::string& text);

std::string serialize_point_file(const ColoredPointSet& ps);

// Reads from the path, or standard input when the path is "-".
ColoredPointSet load_points(const std::string& path);

}  // namespace balis
