#pragma once

#include "lensgraph/drawing.hpp"
#include "lensgraph/geometry.hpp"

#include <cstddef>

namespace lensgraph::testing {

/// Segment classification by solving a + s(b - a) = c + t(d - c) directly.
Intersection oracle_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// Number of 4-element subsets of an n-set, by enumeration.
std::size_t count_four_subsets(std::size_t n);

/// Sum of (j - i) over 1 <= i < j <= n, by enumeration.
std::size_t semicircle_edge_count(std::size_t n);

/// Minimum deletions over every admissible bipartition and every subset of
/// edges, with separation decided by separated_verdict on each part.
std::size_t brute_force_bisection_width(const Drawing& d);

} // namespace lensgraph::testing
