#include "lensgraph/geometry.hpp"

#include "lensgraph/errors.hpp"

#include <algorithm>
#include <vector>

namespace lensgraph {

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_) throw DomainError("zero-length segment at " + to_string(a_));
}

Orientation orient(const Point& p, const Point& q, const Point& r) {
    const Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return static_cast<Orientation>(sgn(det));
}

const char* to_string(IntersectionTag tag) {
    switch (tag) {
    case IntersectionTag::Disjoint: return "Disjoint";
    case IntersectionTag::ProperCross: return "ProperCross";
    case IntersectionTag::EndpointTouch: return "EndpointTouch";
    case IntersectionTag::ImproperTouch: return "ImproperTouch";
    case IntersectionTag::Overlap: return "Overlap";
    }
    return "?";
}

const char* to_string(Location loc) {
    switch (loc) {
    case Location::Inside: return "Inside";
    case Location::Outside: return "Outside";
    case Location::OnBoundary: return "OnBoundary";
    }
    return "?";
}

namespace {

const Rational& min_of(const Rational& u, const Rational& v) { return u < v ? u : v; }
const Rational& max_of(const Rational& u, const Rational& v) { return u < v ? v : u; }

bool is_endpoint(const Point& p, const Point& a, const Point& b) { return p == a || p == b; }

} // namespace

bool boxes_overlap(const Point& a, const Point& b, const Point& c, const Point& d) {
    return max_of(a.x, b.x) >= min_of(c.x, d.x) && max_of(c.x, d.x) >= min_of(a.x, b.x) &&
           max_of(a.y, b.y) >= min_of(c.y, d.y) && max_of(c.y, d.y) >= min_of(a.y, b.y);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (p.x < min_of(a.x, b.x) || p.x > max_of(a.x, b.x)) return false;
    if (p.y < min_of(a.y, b.y) || p.y > max_of(a.y, b.y)) return false;
    return orient(a, b, p) == Orientation::Collinear;
}

Intersection segment_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (!boxes_overlap(a, b, c, d)) return {};

    const int o1 = static_cast<int>(orient(a, b, c));
    const int o2 = static_cast<int>(orient(a, b, d));

    if (o1 == 0 && o2 == 0) {
        // Collinear: compare the parameter intervals along a nonconstant axis.
        const bool use_x = a.x != b.x;
        const auto& a0 = use_x ? a.x : a.y;
        const auto& b0 = use_x ? b.x : b.y;
        const auto& c0 = use_x ? c.x : c.y;
        const auto& d0 = use_x ? d.x : d.y;
        const Rational& lo = max_of(min_of(a0, b0), min_of(c0, d0));
        const Rational& hi = min_of(max_of(a0, b0), max_of(c0, d0));
        if (lo > hi) return {};
        if (lo < hi) return {IntersectionTag::Overlap, std::nullopt};
        // One shared point, an extreme of both intervals.
        const Point& shared = (use_x ? a.x : a.y) == lo ? a : b;
        return {IntersectionTag::EndpointTouch, shared};
    }

    const int o3 = static_cast<int>(orient(c, d, a));
    const int o4 = static_cast<int>(orient(c, d, b));

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        const Rational ex = b.x - a.x, ey = b.y - a.y;
        const Rational fx = d.x - c.x, fy = d.y - c.y;
        const Rational denom = ex * fy - ey * fx;
        const Rational t = ((c.x - a.x) * fy - (c.y - a.y) * fx) / denom;
        return {IntersectionTag::ProperCross, Point{a.x + t * ex, a.y + t * ey}};
    }

    // Not collinear, so at most one shared point and it is an endpoint.
    const Point* touch = nullptr;
    if (o1 == 0 && on_segment(c, a, b)) touch = &c;
    else if (o2 == 0 && on_segment(d, a, b)) touch = &d;
    else if (o3 == 0 && on_segment(a, c, d)) touch = &a;
    else if (o4 == 0 && on_segment(b, c, d)) touch = &b;
    if (touch == nullptr) return {};
    const bool both = is_endpoint(*touch, a, b) && is_endpoint(*touch, c, d);
    return {both ? IntersectionTag::EndpointTouch : IntersectionTag::ImproperTouch, *touch};
}

Location point_in_polygon(const Point& p, std::span<const Point> polygon) {
    const std::size_t m = polygon.size();
    if (m < 3) throw NonSimplePolygon("polygon needs at least three vertices");
    for (std::size_t i = 0; i < m; ++i) {
        if (polygon[i] == polygon[(i + 1) % m]) {
            throw NonSimplePolygon("zero-length polygon edge at " + to_string(polygon[i]));
        }
    }
    {
        std::vector<const Point*> sorted;
        sorted.reserve(m);
        for (const auto& v : polygon) sorted.push_back(&v);
        std::sort(sorted.begin(), sorted.end(), [](const Point* u, const Point* v) { return PointLess{}(*u, *v); });
        for (std::size_t i = 1; i < m; ++i) {
            if (*sorted[i - 1] == *sorted[i]) throw NonSimplePolygon("repeated polygon vertex " + to_string(*sorted[i]));
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (on_segment(p, polygon[i], polygon[(i + 1) % m])) return Location::OnBoundary;
    }

    // Ray p + s * (1, t), s > 0. A vertex w is on it iff cross(dir, w - p) = 0
    // and w - p points along dir. At most m values of t are rejected.
    auto side = [&p](const Rational& t, const Point& w) { return sgn((w.y - p.y) - t * (w.x - p.x)); };
    Rational t = 1;
    for (;; t += 1) {
        bool hits = false;
        for (const auto& w : polygon) {
            if (side(t, w) == 0 && w.x > p.x) {
                hits = true;
                break;
            }
        }
        if (!hits) break;
    }

    std::size_t crossings = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % m];
        const int sa = side(t, a);
        const int sb = side(t, b);
        if (sa * sb >= 0) continue;
        // s = cross(a - p, b - a) / cross(dir, b - a); only its sign matters.
        const Rational ex = b.x - a.x, ey = b.y - a.y;
        const int num = sgn((a.x - p.x) * ey - (a.y - p.y) * ex);
        const int den = sgn(ey - t * ex);
        if (num * den > 0) ++crossings;
    }
    return crossings % 2 == 1 ? Location::Inside : Location::Outside;
}

bool is_simple_polygon(std::span<const Point> polygon) {
    const std::size_t m = polygon.size();
    if (m < 3) return false;
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % m];
        if (a == b) return false;
        for (std::size_t j = i + 1; j < m; ++j) {
            const Point& c = polygon[j];
            const Point& d = polygon[(j + 1) % m];
            const auto hit = segment_intersection(a, b, c, d);
            const bool adjacent = j == i + 1 || (i == 0 && j == m - 1);
            if (adjacent) {
                const Point& common = j == i + 1 ? polygon[j] : polygon[0];
                if (hit.tag != IntersectionTag::EndpointTouch || !(*hit.point == common)) return false;
            } else if (hit.tag != IntersectionTag::Disjoint) {
                return false;
            }
        }
    }
    return true;
}

} // namespace lensgraph
