#include "lensgraph/generators.hpp"

#include "lensgraph/crossings.hpp"
#include "lensgraph/errors.hpp"
#include "lensgraph/lenses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace lensgraph {

const char* to_string(Family f) {
    switch (f) {
    case Family::Semicircle: return "semicircle";
    case Family::NestedLenses: return "nested";
    case Family::ConvexComplete: return "convex";
    case Family::RandomSeparated: return "random";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "semicircle") return Family::Semicircle;
    if (name == "nested") return Family::NestedLenses;
    if (name == "convex") return Family::ConvexComplete;
    if (name == "random") return Family::RandomSeparated;
    throw DomainError("unknown family '" + name + "' (expected semicircle, nested, convex or random)");
}

Drawing generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::Semicircle: return gen_semicircle(spec.n, spec.segments_per_arc);
    case Family::NestedLenses: return gen_nested_lenses(spec.k);
    case Family::ConvexComplete: return gen_convex_complete(spec.n);
    case Family::RandomSeparated: return gen_random_separated(spec.n, spec.extra_parallel, spec.seed);
    }
    throw DomainError("unknown family");
}

namespace {

// --- semicircles ---------------------------------------------------------

struct Triple {
    int i, k, j;
    Rational p;
};

// Edge order: i ascending, then j, then k. p = k + r / (D + 1), where D is
// the number of pairs (i, j) with i <= k < j and r the 1-based rank of
// (i, j) among them.
std::vector<Triple> semicircle_triples(int n) {
    std::vector<Triple> out;
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (int k = i; k < j; ++k) {
                const int count = k * (n - k);
                const int rank = (i - 1) * (n - k) + (j - k);
                Rational p = Rational(k) + Rational(rank, count + 1);
                p.canonicalize();
                out.push_back({i, k, j, std::move(p)});
            }
        }
    }
    return out;
}

bool strictly_interleaved(const Rational& a1, const Rational& b1, const Rational& a2, const Rational& b2) {
    return (a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1);
}

Rational rational_approx(double value, long quantum) {
    Rational r(static_cast<long>(std::llround(value * static_cast<double>(quantum))), quantum);
    r.canonicalize();
    return r;
}

// Chord polyline of the semicircle over [left, right] on the x-axis, from
// left to right, above the axis when `upper`. Interior samples are rational
// points of the circle via t -> ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
// The first and last interior samples sit closer to the ends on larger
// circles, which keeps nested circles tangent at a shared end apart.
void append_semicircle(std::vector<Point>& out, const Rational& left, const Rational& right, bool upper,
                       int segments, int attempt) {
    const Rational center = (left + right) / 2;
    const Rational radius = (right - left) / 2;
    const double g = 1.0 / (1.0 + to_double(radius) * (1.0 + 0.25 * attempt));
    const long quantum = 4096L * (attempt + 1) + 1;
    if (out.empty() || !(out.back() == Point{left, 0})) out.push_back({left, 0});
    Rational last_t = -1;
    for (int m = 1; m < segments; ++m) {
        const double u = (m - 1 + g) / (segments - 2 + 2 * g);
        const double phi = std::numbers::pi * (1.0 - u);
        const Rational t = rational_approx(std::tan(phi / 2), quantum);
        if (t == last_t || t <= 0) continue;
        last_t = t;
        const Rational denom = 1 + t * t;
        const Rational x = center + radius * (1 - t * t) / denom;
        const Rational y = radius * 2 * t / denom;
        out.push_back({x, upper ? y : Rational(-y)});
    }
    out.push_back({right, 0});
}

Drawing build_semicircle(int n, int segments, int attempt, const std::vector<Triple>& triples) {
    std::vector<Point> vertices;
    for (int i = 1; i <= n; ++i) vertices.push_back({i, 0});
    std::vector<Edge> edges;
    for (const auto& t : triples) {
        Edge e;
        e.u = static_cast<VertexId>(t.i - 1);
        e.v = static_cast<VertexId>(t.j - 1);
        append_semicircle(e.arc, Rational(t.i), t.p, true, segments, attempt);
        append_semicircle(e.arc, t.p, Rational(t.j), false, segments, attempt);
        edges.push_back(std::move(e));
    }
    return Drawing(std::move(vertices), std::move(edges));
}

bool certify_semicircle(const Drawing& d, int n) {
    if (!d.validation().ok) return false;
    const auto report = count_crossings(d);
    for (EdgeId a = 0; a < d.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < d.edge_count(); ++b) {
            if (report.count(a, b) != semicircle_expected_crossings(n, a, b)) return false;
        }
    }
    return separated_verdict(d, report).separated;
}

// --- deterministic random draws --------------------------------------------

using Engine = std::mt19937_64;

Engine make_engine(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32)};
    return Engine(seq);
}

// Uniform in [0, bound) by rejection; independent of the library's
// distribution implementations.
std::uint64_t draw_below(Engine& eng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = eng();
        if (x < limit) return x % bound;
    }
}

bool collinear_with_any(const std::vector<Point>& pts, const Point& p) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (orient(pts[a], pts[b], p) == Orientation::Collinear) return true;
        }
    }
    return false;
}

} // namespace

std::size_t semicircle_expected_crossings(int n, EdgeId a, EdgeId b) {
    const auto triples = semicircle_triples(n);
    const Triple& s = triples.at(a);
    const Triple& t = triples.at(b);
    std::size_t c = 0;
    if (strictly_interleaved(Rational(s.i), s.p, Rational(t.i), t.p)) ++c;
    if (strictly_interleaved(s.p, Rational(s.j), t.p, Rational(t.j))) ++c;
    return c;
}

Drawing gen_semicircle(int n, int segments_per_arc) {
    if (n < 2) throw DomainError("semicircle construction needs n >= 2");
    if (segments_per_arc < 8) throw DomainError("semicircle discretization needs at least 8 segments per arc");
    const auto triples = semicircle_triples(n);
    constexpr int kAttempts = 4;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Drawing d = build_semicircle(n, segments_per_arc, attempt, triples);
        if (certify_semicircle(d, n)) return d;
    }
    throw DegenerateDiscretization("semicircle(" + std::to_string(n) + ") with " + std::to_string(segments_per_arc) +
                                   " segments per arc failed certification; retry with more segments");
}

Drawing gen_nested_lenses(int k) {
    if (k < 1) throw DomainError("nested lenses need k >= 1");
    const Rational reach(k + 1);
    std::vector<Point> vertices{{-reach, 0}, {reach, 0}};
    for (int h = 1; h < k; ++h) vertices.push_back({0, Rational(2 * h + 1, 2)});
    std::vector<Edge> edges;
    for (int h = 1; h <= k; ++h) edges.push_back({0, 1, {{-reach, 0}, {0, h}, {reach, 0}}});
    return Drawing(std::move(vertices), std::move(edges));
}

Drawing gen_convex_complete(int n) {
    if (n < 3) throw DomainError("convex complete graph needs n >= 3");
    constexpr int kAttempts = 16;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<Point> vertices;
        const long quantum = 1000 + 7L * attempt;
        for (int m = 0; m < n; ++m) {
            // Small deterministic jitter after the first attempt breaks
            // accidental concurrency of diagonals.
            const double jitter = attempt == 0 ? 0.0 : 0.15 * std::sin(12.9898 * (m + 1) * attempt) / n;
            const double theta = -std::numbers::pi + 2 * std::numbers::pi * (m + 0.5 + jitter) / n;
            const Rational t = rational_approx(std::tan(theta / 2), quantum);
            const Rational denom = 1 + t * t;
            const Rational scale(n);
            vertices.push_back({scale * (1 - t * t) / denom, scale * 2 * t / denom});
        }
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), {vertices[a], vertices[b]}});
            }
        }
        try {
            Drawing d(std::move(vertices), std::move(edges));
            if (d.validation().ok) return d;
        } catch (const SchemaError&) {
            // coincident rounded points; try the next attempt
        }
    }
    throw GenerationExhausted("no general-position convex K_" + std::to_string(n));
}

Drawing gen_random_separated(int n, int extra_parallel, std::uint64_t seed) {
    if (n < 3) throw DomainError("random separated drawings need n >= 3");
    if (extra_parallel < 0) throw DomainError("extra_parallel must be nonnegative");
    Engine eng = make_engine(seed);

    // Vertices: distinct grid points, no three collinear, so straight edges
    // never pass through vertices or overlap.
    const auto grid = static_cast<std::uint64_t>(6 * n + 6);
    std::vector<Point> points;
    for (int budget = 20000; static_cast<int>(points.size()) < n; --budget) {
        if (budget == 0) throw GenerationExhausted("could not place vertices in general position");
        Point p{static_cast<long>(draw_below(eng, grid)), static_cast<long>(draw_below(eng, grid))};
        if (std::find(points.begin(), points.end(), p) != points.end()) continue;
        if (collinear_with_any(points, p)) continue;
        points.push_back(std::move(p));
    }

    Drawing current(points, {});
    auto try_add = [&](Edge candidate) {
        if (!validate_extension(current, candidate).empty()) return false;
        std::vector<Edge> edges = current.edges();
        edges.push_back(std::move(candidate));
        current = Drawing(points, std::move(edges));
        return true;
    };

    // Straight edges in random order, each kept with a per-instance density.
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < static_cast<VertexId>(n); ++a) {
        for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b) pairs.emplace_back(a, b);
    }
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[draw_below(eng, i)]);
    const std::uint64_t density = 15 + draw_below(eng, 50);
    for (const auto& [a, b] : pairs) {
        if (draw_below(eng, 100) < density) try_add({a, b, {points[a], points[b]}});
    }

    // Parallel detours u -> q -> v around a third vertex w.
    static const Rational kStretch[] = {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
    static const Rational kBase[] = {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(3, 4)};
    int added = 0;
    for (int attempt = 0; added < extra_parallel && attempt < 40 * extra_parallel + 40; ++attempt) {
        VertexId u, v;
        if (current.edge_count() > 0 && draw_below(eng, 2) == 0) {
            const auto& e = current.edge(static_cast<EdgeId>(draw_below(eng, current.edge_count())));
            u = e.u;
            v = e.v;
        } else {
            u = static_cast<VertexId>(draw_below(eng, n));
            v = static_cast<VertexId>(draw_below(eng, n - 1));
            if (v >= u) ++v;
        }
        auto w = static_cast<VertexId>(draw_below(eng, n - 2));
        for (VertexId skip : {std::min(u, v), std::max(u, v)}) {
            if (w >= skip) ++w;
        }
        const Rational& s = kBase[draw_below(eng, 5)];
        const Rational& lambda = kStretch[draw_below(eng, 5)];
        const Point base{points[u].x + s * (points[v].x - points[u].x), points[u].y + s * (points[v].y - points[u].y)};
        const Point q{points[w].x + lambda * (points[w].x - base.x), points[w].y + lambda * (points[w].y - base.y)};
        if (q == points[u] || q == points[v]) continue;
        Edge candidate{u, v, {points[u], q, points[v]}};
        if (!validate_extension(current, candidate).empty()) continue;

        std::vector<Edge> edges = current.edges();
        edges.push_back(candidate);
        Drawing next(points, std::move(edges));
        const auto fresh = static_cast<EdgeId>(next.edge_count() - 1);

        bool ok = true;
        CrossingReport class_report;
        ParallelClass cls{std::min(u, v), std::max(u, v), {}};
        for (EdgeId id = 0; id < fresh && ok; ++id) {
            const std::size_t c = arc_crossings(next, id, fresh);
            if (c > 1) ok = false;
            const auto& e = next.edge(id);
            if (std::min(e.u, e.v) == cls.a && std::max(e.u, e.v) == cls.b) {
                cls.edges.push_back(id);
                if (c > 0) ok = false;
            }
        }
        if (!ok) continue;
        cls.edges.push_back(fresh);
        for (const auto& lens : class_lenses(next, cls, class_report)) {
            if (lens.size() == 0) ok = false;
        }
        if (!ok) continue;
        current = std::move(next);
        ++added;
    }
    return current;
}

} // namespace lensgraph
