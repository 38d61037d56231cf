#pragma once

#include <string>

#include "sdraw/geometry.hpp"
#include "sdraw/halfcircle.hpp"

namespace sdraw::cli {

// Crude renderings for eyeballing; coordinates are scaled into a square.
std::string drawing_svg(const GeometricDrawing& d);
std::string halfcircle_svg(const HalfCircleDrawing& d);

}  // namespace sdraw::cli
