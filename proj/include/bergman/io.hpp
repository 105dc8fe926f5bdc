#pragma once

#include <string>
#include <vector>

#include "bergman/power_series.hpp"

namespace bergman {

/// Map coefficient file: one "re im" pair per line, line k giving the
/// coefficient of z^k.  Blank lines and text after '#' are ignored.
PowerSeries read_coefficient_file(const std::string& path);

/// Polygon file: one "re im" vertex per line, same comment rules; the
/// polygon is closed implicitly.  At least three vertices are required.
std::vector<Complex> read_polygon_file(const std::string& path);

}  // namespace bergman
