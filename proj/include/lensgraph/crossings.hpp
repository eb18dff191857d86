#pragma once

#include "lensgraph/drawing.hpp"

#include <json.hpp>

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

namespace lensgraph {

/// Unordered edge pair stored with first < second.
struct EdgePair {
    EdgeId first;
    EdgeId second;

    static EdgePair of(EdgeId a, EdgeId b) { return a < b ? EdgePair{a, b} : EdgePair{b, a}; }
    friend auto operator<=>(const EdgePair&, const EdgePair&) = default;
};

struct CrossingPoint {
    EdgePair pair;
    Point point;

    friend bool operator==(const CrossingPoint&, const CrossingPoint&) = default;
};

/// Crossings of a valid drawing. `pair_counts` lists only pairs that cross;
/// `total` is the number of crossing points (sum of the counts);
/// `crossing_points` is ordered by pair, then lexicographically by point.
struct CrossingReport {
    std::map<EdgePair, std::size_t> pair_counts;
    std::size_t total = 0;
    std::size_t max_pair = 0;
    std::vector<CrossingPoint> crossing_points;

    std::size_t count(EdgeId a, EdgeId b) const;

    friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// Reference engine: every pair of segments from distinct arcs.
/// Throws InvalidDrawing unless the drawing validates.
CrossingReport count_crossings(const Drawing& d);

/// Bentley-Ottmann sweep with exact event ordering. Same contract and,
/// on every valid drawing, the same report as count_crossings.
CrossingReport count_crossings_sweep(const Drawing& d);

bool is_single_crossing(const CrossingReport& r);

/// Proper crossings between two arcs of a drawing (no validity check).
std::size_t arc_crossings(const Drawing& d, EdgeId a, EdgeId b);

/// Crossings among the edges in `edges` only, read off a full report.
std::size_t crossings_within(const CrossingReport& r, const std::vector<EdgeId>& edges);

/// {"total", "max_pair", "pairs": {"i-j": count}, "points": [{"pair", "point"}]}
nlohmann::json crossings_to_json(const CrossingReport& r);

} // namespace lensgraph
