#pragma once

#include "lensgraph/drawing.hpp"

#include <string>
#include <vector>

namespace lensgraph {

struct SvgOptions {
    /// Filled polygons drawn beneath the arcs (lens regions).
    std::vector<std::vector<Point>> shaded_regions;
    /// Points marked on top of the arcs (crossings).
    std::vector<Point> highlighted_points;
    bool vertex_labels = true;
    double width_px = 800.0;
};

/// Static SVG: one <path> per arc, one <circle> per vertex. Coordinates are
/// decimal with 9 significant digits; output depends only on the inputs.
std::string render_svg(const Drawing& d, const SvgOptions& options = {});

} // namespace lensgraph
