// Deterministic tiling renderers: letter grids and SVG.
#pragma once

#include <string>

#include "ribbon/solver.hpp"

namespace ribbon {

// One letter per tile in canonical placement order, cycling a-z then A-Z;
// rows printed top to bottom, '.' marks bounding-box cells outside the
// region. Empty region renders as the empty string.
std::string render_text(const Tiling& t);

// SVG 1.1, one filled polygon per tile, fixed hue per tile id. Integer
// coordinates only, so output is byte-stable.
std::string render_svg(const Tiling& t);

}  // namespace ribbon
