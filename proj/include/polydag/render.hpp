#pragma once

// Static SVG pictures of three tropical hyperplanes in the plane x1 = 0.

#include <string>

#include "polydag/trop.hpp"

namespace polydag {

/// Draws the max-tropical hyperplanes with apices at the columns of a 3 x 3
/// matrix in coordinates (x2 - x1, x3 - x1). Square inputs with a zero
/// diagonal and no negative cycle also get Q(C) shaded.
std::string render_arrangement_svg(const TropMatrix& v);

}  // namespace polydag
