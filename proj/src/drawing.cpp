#include "lensgraph/drawing.hpp"

#include "lensgraph/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace lensgraph {

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::PassesThroughVertex: return "PassesThroughVertex";
    case ViolationKind::ImproperTouch: return "ImproperTouch";
    case ViolationKind::Overlap: return "Overlap";
    case ViolationKind::BreakpointIncidence: return "BreakpointIncidence";
    case ViolationKind::ConcurrentCrossing: return "ConcurrentCrossing";
    case ViolationKind::SelfIntersection: return "SelfIntersection";
    }
    return "?";
}

struct Drawing::Cache {
    std::once_flag once;
    ValidationReport report;
};

Drawing::Drawing() : cache_(std::make_shared<Cache>()) {}

Drawing::Drawing(std::vector<Point> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), cache_(std::make_shared<Cache>()) {
    {
        std::vector<const Point*> sorted;
        for (const auto& p : vertices_) sorted.push_back(&p);
        std::sort(sorted.begin(), sorted.end(), [](const Point* a, const Point* b) { return PointLess{}(*a, *b); });
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (*sorted[i - 1] == *sorted[i]) throw SchemaError("duplicate vertex point " + to_string(*sorted[i]));
        }
    }
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        const std::string where = "edge " + std::to_string(id);
        if (e.u >= vertices_.size() || e.v >= vertices_.size()) throw SchemaError(where + ": endpoint out of range");
        if (e.u == e.v) throw SchemaError(where + ": loop at vertex " + std::to_string(e.u));
        if (e.arc.size() < 2) throw SchemaError(where + ": arc needs at least two points");
        if (!(e.arc.front() == vertices_[e.u]) || !(e.arc.back() == vertices_[e.v])) {
            throw SchemaError(where + ": arc ends do not match its endpoint vertices");
        }
        for (std::size_t i = 1; i < e.arc.size(); ++i) {
            if (e.arc[i - 1] == e.arc[i]) throw SchemaError(where + ": repeated consecutive arc point");
        }
    }
}

std::size_t Drawing::segment_count() const {
    std::size_t total = 0;
    for (const auto& e : edges_) total += e.arc.size() - 1;
    return total;
}

const ValidationReport& Drawing::validation() const {
    std::call_once(cache_->once, [this] { cache_->report = validate(*this); });
    return cache_->report;
}

void Drawing::require_valid() const {
    const auto& report = validation();
    if (!report.ok) {
        const auto& v = report.violations.front();
        throw InvalidDrawing("drawing is not in general position (" + std::to_string(report.violations.size()) +
                             " violations, first: " + to_string(v.kind) + ")");
    }
}

namespace {

struct SegRef {
    EdgeId edge;
    std::size_t index; // segment index within the arc
    const Point* a;
    const Point* b;
    const Rational* xmin;
    const Rational* xmax;
};

std::vector<SegRef> collect_segments(const std::vector<Edge>& edges, EdgeId first_id = 0) {
    std::vector<SegRef> segs;
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const auto& arc = edges[id].arc;
        for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
            const Point* a = &arc[i];
            const Point* b = &arc[i + 1];
            const bool a_left = a->x <= b->x;
            segs.push_back({static_cast<EdgeId>(first_id + id), i, a, b, a_left ? &a->x : &b->x, a_left ? &b->x : &a->x});
        }
    }
    return segs;
}

bool is_arc_terminal(const Edge& e, const Point& p) { return p == e.arc.front() || p == e.arc.back(); }

// Segment `index` of `e` may legitimately contain p only as its own end at
// the arc's terminal position.
bool legit_vertex_contact(const Edge& e, std::size_t index, const Point& p) {
    const std::size_t last = e.arc.size() - 2;
    return (index == 0 && p == e.arc.front()) || (index == last && p == e.arc.back());
}

class Checker {
public:
    explicit Checker(std::vector<Violation>& out) : out_(out) {}

    void same_arc(const Edge& e, EdgeId id, const SegRef& s, const SegRef& t) {
        const auto hit = segment_intersection(*s.a, *s.b, *t.a, *t.b);
        const std::size_t lo = std::min(s.index, t.index), hi = std::max(s.index, t.index);
        if (hi == lo + 1) {
            if (hit.tag == IntersectionTag::EndpointTouch && *hit.point == e.arc[hi]) return;
        } else if (hit.tag == IntersectionTag::Disjoint) {
            return;
        }
        out_.push_back({ViolationKind::SelfIntersection, {id}, hit.point, std::nullopt});
    }

    void distinct_arcs(const Edge& e, const Edge& f, const SegRef& s, const SegRef& t) {
        const auto hit = segment_intersection(*s.a, *s.b, *t.a, *t.b);
        std::vector<EdgeId> ids{std::min(s.edge, t.edge), std::max(s.edge, t.edge)};
        switch (hit.tag) {
        case IntersectionTag::Disjoint: return;
        case IntersectionTag::ProperCross:
            crossings_.emplace_back(*hit.point, s.edge, t.edge);
            return;
        case IntersectionTag::EndpointTouch:
            if (is_arc_terminal(e, *hit.point) && is_arc_terminal(f, *hit.point)) return;
            out_.push_back({ViolationKind::BreakpointIncidence, std::move(ids), hit.point, std::nullopt});
            return;
        case IntersectionTag::ImproperTouch:
            out_.push_back({ViolationKind::ImproperTouch, std::move(ids), hit.point, std::nullopt});
            return;
        case IntersectionTag::Overlap:
            out_.push_back({ViolationKind::Overlap, std::move(ids), std::nullopt, std::nullopt});
            return;
        }
    }

    void finish_concurrency() {
        std::map<Point, std::set<EdgeId>, PointLess> by_point;
        for (const auto& [p, a, b] : crossings_) {
            auto& s = by_point[p];
            s.insert(a);
            s.insert(b);
        }
        for (auto& [p, ids] : by_point) {
            if (ids.size() >= 3) {
                out_.push_back({ViolationKind::ConcurrentCrossing, std::vector<EdgeId>(ids.begin(), ids.end()), p,
                                std::nullopt});
            }
        }
    }

private:
    std::vector<Violation>& out_;
    std::vector<std::tuple<Point, EdgeId, EdgeId>> crossings_;
};

void check_vertices(const std::vector<Point>& vertices, const std::vector<Edge>& edges, const std::vector<SegRef>& segs,
                    std::vector<Violation>& out) {
    std::vector<VertexId> order(vertices.size());
    for (VertexId i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return vertices[a].x < vertices[b].x; });
    for (const auto& s : segs) {
        auto first = std::lower_bound(order.begin(), order.end(), *s.xmin,
                                      [&](VertexId v, const Rational& x) { return vertices[v].x < x; });
        for (auto it = first; it != order.end() && vertices[*it].x <= *s.xmax; ++it) {
            const Point& w = vertices[*it];
            if (!on_segment(w, *s.a, *s.b)) continue;
            const Edge& e = edges[s.edge];
            const bool own_end = (*it == e.u || *it == e.v) && legit_vertex_contact(e, s.index, w);
            if (!own_end) out.push_back({ViolationKind::PassesThroughVertex, {s.edge}, w, *it});
        }
    }
}

bool violation_less(const Violation& a, const Violation& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.edges != b.edges) return a.edges < b.edges;
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    if (a.witness.has_value() != b.witness.has_value()) return !a.witness.has_value();
    return a.witness && PointLess{}(*a.witness, *b.witness);
}

bool violation_equal(const Violation& a, const Violation& b) {
    return a.kind == b.kind && a.edges == b.edges && a.vertex == b.vertex && a.witness == b.witness;
}

void canonicalize(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), violation_less);
    v.erase(std::unique(v.begin(), v.end(), violation_equal), v.end());
}

} // namespace

ValidationReport validate(const Drawing& d) {
    const auto& edges = d.edges();
    auto segs = collect_segments(edges);
    std::sort(segs.begin(), segs.end(), [](const SegRef& s, const SegRef& t) {
        return *s.xmin < *t.xmin || (*s.xmin == *t.xmin && std::tie(s.edge, s.index) < std::tie(t.edge, t.index));
    });

    ValidationReport report;
    Checker checker(report.violations);
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const SegRef& s = segs[i];
        for (std::size_t j = i + 1; j < segs.size() && *segs[j].xmin <= *s.xmax; ++j) {
            const SegRef& t = segs[j];
            if (s.edge == t.edge) checker.same_arc(edges[s.edge], s.edge, s, t);
            else checker.distinct_arcs(edges[s.edge], edges[t.edge], s, t);
        }
    }
    checker.finish_concurrency();
    check_vertices(d.vertices(), edges, segs, report.violations);
    canonicalize(report.violations);
    report.ok = report.violations.empty();
    return report;
}

std::vector<Violation> validate_extension(const Drawing& base, const Edge& candidate) {
    std::vector<Violation> out;
    const auto n = base.vertex_count();
    if (candidate.u >= n || candidate.v >= n || candidate.u == candidate.v || candidate.arc.size() < 2 ||
        !(candidate.arc.front() == base.vertex(candidate.u)) || !(candidate.arc.back() == base.vertex(candidate.v))) {
        throw SchemaError("candidate edge is structurally invalid");
    }
    const auto new_id = static_cast<EdgeId>(base.edge_count());
    std::vector<Edge> single{candidate};
    const auto fresh = collect_segments(single, new_id);
    const auto existing = collect_segments(base.edges());

    Checker checker(out);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
        for (std::size_t j = i + 1; j < fresh.size(); ++j) checker.same_arc(candidate, new_id, fresh[i], fresh[j]);
        for (const auto& t : existing) {
            if (*t.xmin > *fresh[i].xmax || *t.xmax < *fresh[i].xmin) continue;
            checker.distinct_arcs(candidate, base.edge(t.edge), fresh[i], t);
        }
    }
    // Concurrency can only involve the new arc twice at one point.
    checker.finish_concurrency();

    std::vector<Edge> all_edges = base.edges();
    all_edges.push_back(candidate);
    check_vertices(base.vertices(), all_edges, fresh, out);
    canonicalize(out);
    return out;
}

std::vector<std::size_t> degree_sequence(const Drawing& d) {
    std::vector<std::size_t> deg(d.vertex_count(), 0);
    for (const auto& e : d.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

Drawing subdrawing(const Drawing& d, std::span<const VertexId> vertices, std::span<const EdgeId> edges,
                   SubdrawingMap* map) {
    std::vector<std::optional<VertexId>> renumber(d.vertex_count());
    std::vector<Point> points;
    for (VertexId v : vertices) {
        if (renumber.at(v)) throw DomainError("subdrawing: repeated vertex " + std::to_string(v));
        renumber[v] = static_cast<VertexId>(points.size());
        points.push_back(d.vertex(v));
    }
    std::vector<Edge> kept;
    for (EdgeId id : edges) {
        const Edge& e = d.edge(id);
        if (!renumber[e.u] || !renumber[e.v]) {
            throw DomainError("subdrawing: edge " + std::to_string(id) + " leaves the vertex subset");
        }
        kept.push_back({*renumber[e.u], *renumber[e.v], e.arc});
    }
    if (map) {
        map->vertex_origin.assign(vertices.begin(), vertices.end());
        map->edge_origin.assign(edges.begin(), edges.end());
    }
    return Drawing(std::move(points), std::move(kept));
}

Drawing with_vertices(const Drawing& d, std::span<const Point> extra) {
    std::vector<Point> points = d.vertices();
    points.insert(points.end(), extra.begin(), extra.end());
    return Drawing(std::move(points), d.edges());
}

Drawing without_vertex(const Drawing& d, VertexId removed) {
    std::vector<VertexId> keep;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (v != removed) keep.push_back(v);
    }
    std::vector<EdgeId> edges;
    for (EdgeId id = 0; id < d.edge_count(); ++id) {
        if (d.edge(id).u != removed && d.edge(id).v != removed) edges.push_back(id);
    }
    return subdrawing(d, keep, edges);
}

} // namespace lensgraph
