#pragma once

#include "lensgraph/rational.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>

namespace lensgraph {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// Lexicographic (x, then y) order; the event order of the sweep engine.
struct PointLess {
    bool operator()(const Point& a, const Point& b) const {
        const int cx = cmp(a.x, b.x);
        return cx < 0 || (cx == 0 && cmp(a.y, b.y) < 0);
    }
};

std::string to_string(const Point& p);

/// Closed segment with distinct endpoints.
class Segment {
public:
    Segment(Point a, Point b);

    const Point& a() const { return a_; }
    const Point& b() const { return b_; }

private:
    Point a_;
    Point b_;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Sign of det(q - p, r - p).
Orientation orient(const Point& p, const Point& q, const Point& r);

enum class IntersectionTag { Disjoint, ProperCross, EndpointTouch, ImproperTouch, Overlap };

const char* to_string(IntersectionTag tag);

/// Result of classifying two closed segments. `point` is set for
/// ProperCross, EndpointTouch and ImproperTouch.
struct Intersection {
    IntersectionTag tag = IntersectionTag::Disjoint;
    std::optional<Point> point;
};

/// Exact classification of segments ab and cd (both nondegenerate).
///
/// ProperCross: a single shared point strictly inside both segments.
/// EndpointTouch: a single shared point that is an endpoint of both.
/// ImproperTouch: a single shared point that is an endpoint of exactly one.
/// Overlap: collinear with a shared part of positive length.
Intersection segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

inline Intersection segment_intersection(const Segment& s, const Segment& t) {
    return segment_intersection(s.a(), s.b(), t.a(), t.b());
}

/// True iff p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// Axis-aligned closed boxes of ab and cd overlap.
bool boxes_overlap(const Point& a, const Point& b, const Point& c, const Point& d);

enum class Location { Inside, Outside, OnBoundary };

const char* to_string(Location loc);

/// Crossing-parity test against a ray of direction (1, t), t = 1, 2, ...,
/// the first such ray from p that misses every polygon vertex.
///
/// The polygon is closed implicitly (last vertex joins the first). Throws
/// NonSimplePolygon when the traversal meets an obvious self-intersection:
/// fewer than three vertices, a zero-length edge or a repeated vertex. Full
/// simplicity is checked by is_simple_polygon.
Location point_in_polygon(const Point& p, std::span<const Point> polygon);

/// Quadratic check: no two nonadjacent edges meet and adjacent edges share
/// only their common vertex.
bool is_simple_polygon(std::span<const Point> polygon);

} // namespace lensgraph
