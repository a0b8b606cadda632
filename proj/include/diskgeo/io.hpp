#pragma once

#include <string>

#include "diskgeo/geometry.hpp"

namespace diskgeo {

/// Parses the shell-safe complex literal `[-]ddd[.ddd][(+|-)ddd[.ddd]i]`
/// (no spaces, no exponents), e.g. "0.5+0.1i", "-0.3", "0+1i".
/// Throws Error on any other shape.
Complex parse_complex(const std::string& text);

/// Parses a polygon from text: one "x y" vertex per line, counterclockwise,
/// '#' starts a comment, blank lines ignored. Validates convexity.
ConvexPolygon parse_polygon_text(const std::string& text);

/// Reads and parses a polygon file. Throws Error if the file cannot be read.
ConvexPolygon read_polygon_file(const std::string& path);

}  // namespace diskgeo
