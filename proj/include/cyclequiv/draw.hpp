#pragma once

#include <string>

#include "cyclequiv/dellac.hpp"
#include "cyclequiv/fixed_points.hpp"

namespace cyclequiv {

// DOT graph of the coefficient quiver; when L is given its marked points are
// drawn filled.
std::string to_dot(const CoefficientQuiver& cq, const FixedPoint* L = nullptr);

// SVG rendering: vertices left to right, rows top to bottom with increasing
// index, wrap arrows drawn returning below the grid.
std::string to_svg(const CoefficientQuiver& cq, const FixedPoint* L = nullptr);

// Plain-text box diagram of a configuration with the staircase separator
// drawn with '#'.
std::string dellac_ascii(const AffineDellacConfig& cfg);

} // namespace cyclequiv
