#pragma once

#include "lensgraph/drawing.hpp"

#include <string>
#include <vector>

namespace lensgraph::testing {

/// Square with both diagonals: straight-line K4 with one crossing at (1, 1).
Drawing convex_k4();

/// Center (0,0) joined to four leaves on the axes.
Drawing star_k14();

/// Straight-line K_{1,m}, leaves on a parabola.
Drawing star(int m);

/// Five-cycle drawn as a pentagram: every independent pair crosses once.
Drawing pentagram();

/// Odd cycle 0 -> m -> 2m -> ... (m = (n-1)/2) on rational points of a
/// circle; the classical thrackle drawing of C_n.
Drawing star_polygon(int n);

/// Drawings whose independent edge pairs all cross exactly once.
struct NamedDrawing {
    std::string name;
    Drawing drawing;
};
std::vector<NamedDrawing> thrackle_family();

/// Two hubs joined by two parallel arcs with no vertex between them.
Drawing empty_lens();

/// Parallel pair that crosses itself: not separated.
Drawing crossing_parallel_pair();

} // namespace lensgraph::testing
