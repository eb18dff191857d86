#include "lensgraph/crossings.hpp"

#include "lensgraph/drawing_io.hpp"
#include "lensgraph/errors.hpp"

#include <algorithm>
#include <set>

namespace lensgraph {

std::size_t CrossingReport::count(EdgeId a, EdgeId b) const {
    auto it = pair_counts.find(EdgePair::of(a, b));
    return it == pair_counts.end() ? 0 : it->second;
}

bool is_single_crossing(const CrossingReport& r) { return r.max_pair <= 1; }

namespace {

struct Box {
    Rational xmin, xmax, ymin, ymax;
};

Box arc_box(const std::vector<Point>& arc) {
    Box b{arc[0].x, arc[0].x, arc[0].y, arc[0].y};
    for (const auto& p : arc) {
        if (p.x < b.xmin) b.xmin = p.x;
        if (p.x > b.xmax) b.xmax = p.x;
        if (p.y < b.ymin) b.ymin = p.y;
        if (p.y > b.ymax) b.ymax = p.y;
    }
    return b;
}

bool overlap(const Box& a, const Box& b) {
    return a.xmax >= b.xmin && b.xmax >= a.xmin && a.ymax >= b.ymin && b.ymax >= a.ymin;
}

void cross_arcs(const std::vector<Point>& p, const std::vector<Point>& q, std::vector<Point>& out) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            auto hit = segment_intersection(p[i], p[i + 1], q[j], q[j + 1]);
            if (hit.tag == IntersectionTag::ProperCross) out.push_back(std::move(*hit.point));
        }
    }
}

CrossingReport assemble(std::vector<CrossingPoint> points) {
    std::sort(points.begin(), points.end(), [](const CrossingPoint& a, const CrossingPoint& b) {
        if (a.pair != b.pair) return a.pair < b.pair;
        return PointLess{}(a.point, b.point);
    });
    CrossingReport r;
    for (const auto& cp : points) ++r.pair_counts[cp.pair];
    r.total = points.size();
    for (const auto& [pair, c] : r.pair_counts) r.max_pair = std::max(r.max_pair, c);
    r.crossing_points = std::move(points);
    return r;
}

} // namespace

std::size_t arc_crossings(const Drawing& d, EdgeId a, EdgeId b) {
    std::vector<Point> pts;
    cross_arcs(d.edge(a).arc, d.edge(b).arc, pts);
    return pts.size();
}

std::size_t crossings_within(const CrossingReport& r, const std::vector<EdgeId>& edges) {
    const std::set<EdgeId> in(edges.begin(), edges.end());
    std::size_t total = 0;
    for (const auto& [pair, c] : r.pair_counts) {
        if (in.count(pair.first) && in.count(pair.second)) total += c;
    }
    return total;
}

CrossingReport count_crossings(const Drawing& d) {
    d.require_valid();
    const auto m = d.edge_count();
    std::vector<Box> boxes;
    boxes.reserve(m);
    for (const auto& e : d.edges()) boxes.push_back(arc_box(e.arc));

    std::vector<CrossingPoint> points;
    std::vector<Point> scratch;
    for (EdgeId a = 0; a < m; ++a) {
        for (EdgeId b = a + 1; b < m; ++b) {
            if (!overlap(boxes[a], boxes[b])) continue;
            scratch.clear();
            cross_arcs(d.edge(a).arc, d.edge(b).arc, scratch);
            for (auto& p : scratch) points.push_back({EdgePair{a, b}, std::move(p)});
        }
    }
    return assemble(std::move(points));
}

namespace {

// The sweep runs on a sheared copy x' = x + shear * y chosen so that no
// segment is vertical; shearing preserves incidences and orientation.
struct SweepSegment {
    Point left;
    Point right;
    Rational slope;
    EdgeId edge;
};

Rational choose_shear(const Drawing& d) {
    std::set<Rational> bad;
    bool any_vertical = false;
    for (const auto& e : d.edges()) {
        for (std::size_t i = 0; i + 1 < e.arc.size(); ++i) {
            const Rational dx = e.arc[i + 1].x - e.arc[i].x;
            const Rational dy = e.arc[i + 1].y - e.arc[i].y;
            if (dx == 0) any_vertical = true;
            if (dy != 0) bad.insert(-dx / dy);
        }
    }
    if (!any_vertical) return 0;
    for (long k = 1;; ++k) {
        Rational s(1, k);
        if (!bad.count(s)) return s;
    }
}

class Sweep {
public:
    explicit Sweep(std::vector<SweepSegment> segs) : segs_(std::move(segs)) {
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            queue_[segs_[i].left].starting.push_back(i);
            queue_[segs_[i].right];
        }
    }

    // Returns crossings in sheared coordinates.
    std::vector<CrossingPoint> run() {
        while (!queue_.empty()) {
            auto node = queue_.extract(queue_.begin());
            handle(node.key(), node.mapped().starting);
        }
        return std::move(found_);
    }

private:
    struct Event {
        std::vector<std::size_t> starting;
    };

    Rational y_at(std::size_t s, const Rational& x) const {
        const auto& g = segs_[s];
        return g.left.y + g.slope * (x - g.left.x);
    }

    void handle(const Point& p, std::vector<std::size_t>& starting) {
        // Segments through p form a contiguous run of the status.
        auto lo = std::partition_point(status_.begin(), status_.end(),
                                       [&](std::size_t s) { return y_at(s, p.x) < p.y; });
        auto hi = std::partition_point(lo, status_.end(), [&](std::size_t s) { return y_at(s, p.x) == p.y; });

        std::vector<std::size_t> through;
        for (auto it = lo; it != hi; ++it) {
            if (!(segs_[*it].right == p)) through.push_back(*it);
        }
        for (std::size_t i = 0; i < through.size(); ++i) {
            for (std::size_t j = i + 1; j < through.size(); ++j) {
                const EdgeId a = segs_[through[i]].edge, b = segs_[through[j]].edge;
                if (a != b) found_.push_back({EdgePair::of(a, b), p});
            }
        }

        std::vector<std::size_t> fresh = std::move(through);
        fresh.insert(fresh.end(), starting.begin(), starting.end());
        // Order just to the right of p.
        std::sort(fresh.begin(), fresh.end(), [&](std::size_t a, std::size_t b) {
            const int c = cmp(segs_[a].slope, segs_[b].slope);
            return c < 0 || (c == 0 && a < b);
        });

        const auto at = static_cast<std::size_t>(lo - status_.begin());
        status_.erase(lo, hi);
        status_.insert(status_.begin() + static_cast<std::ptrdiff_t>(at), fresh.begin(), fresh.end());

        if (fresh.empty()) {
            if (at > 0 && at < status_.size()) probe(status_[at - 1], status_[at], p);
        } else {
            const std::size_t top = at + fresh.size() - 1;
            if (at > 0) probe(status_[at - 1], status_[at], p);
            if (top + 1 < status_.size()) probe(status_[top], status_[top + 1], p);
        }
    }

    void probe(std::size_t s, std::size_t t, const Point& p) {
        const auto& a = segs_[s];
        const auto& b = segs_[t];
        if (a.edge == b.edge) return;
        auto hit = segment_intersection(a.left, a.right, b.left, b.right);
        if (hit.tag != IntersectionTag::ProperCross) return;
        if (PointLess{}(p, *hit.point)) queue_.try_emplace(std::move(*hit.point));
    }

    std::vector<SweepSegment> segs_;
    std::map<Point, Event, PointLess> queue_;
    std::vector<std::size_t> status_;
    std::vector<CrossingPoint> found_;
};

} // namespace

CrossingReport count_crossings_sweep(const Drawing& d) {
    d.require_valid();
    const Rational shear = choose_shear(d);
    std::vector<SweepSegment> segs;
    segs.reserve(d.segment_count());
    for (EdgeId id = 0; id < d.edge_count(); ++id) {
        const auto& arc = d.edge(id).arc;
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
            Point a{arc[i].x + shear * arc[i].y, arc[i].y};
            Point b{arc[i + 1].x + shear * arc[i + 1].y, arc[i + 1].y};
            if (PointLess{}(b, a)) std::swap(a, b);
            Rational slope = (b.y - a.y) / (b.x - a.x);
            segs.push_back({std::move(a), std::move(b), std::move(slope), id});
        }
    }
    auto points = Sweep(std::move(segs)).run();
    if (shear != 0) {
        for (auto& cp : points) cp.point.x -= shear * cp.point.y;
    }
    return assemble(std::move(points));
}

nlohmann::json crossings_to_json(const CrossingReport& r) {
    nlohmann::json pairs = nlohmann::json::object();
    for (const auto& [pair, c] : r.pair_counts) {
        pairs[std::to_string(pair.first) + "-" + std::to_string(pair.second)] = c;
    }
    nlohmann::json points = nlohmann::json::array();
    for (const auto& cp : r.crossing_points) {
        points.push_back({{"pair", {cp.pair.first, cp.pair.second}}, {"point", point_to_json(cp.point)}});
    }
    return {{"total", r.total}, {"max_pair", r.max_pair}, {"pairs", pairs}, {"points", points}};
}

} // namespace lensgraph
