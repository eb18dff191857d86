#include "fixtures.hpp"

#include <cmath>
#include <numbers>

namespace lensgraph::testing {

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Edge straight(const std::vector<Point>& v, VertexId a, VertexId b) { return {a, b, {v[a], v[b]}}; }

Point circle_point(int m, int n) {
    const double theta = 2 * std::numbers::pi * (m + 0.25) / n;
    Rational t(static_cast<long>(std::llround(std::tan(theta / 2) * 997)), 997);
    t.canonicalize();
    const Rational denom = 1 + t * t;
    return {10 * (1 - t * t) / denom, 10 * 2 * t / denom};
}

} // namespace

Drawing convex_k4() {
    std::vector<Point> v{pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
    std::vector<Edge> e;
    for (VertexId a = 0; a < 4; ++a) {
        for (VertexId b = a + 1; b < 4; ++b) e.push_back(straight(v, a, b));
    }
    return Drawing(v, e);
}

Drawing star_k14() {
    std::vector<Point> v{pt(0, 0), pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)};
    std::vector<Edge> e;
    for (VertexId leaf = 1; leaf <= 4; ++leaf) e.push_back(straight(v, 0, leaf));
    return Drawing(v, e);
}

Drawing star(int m) {
    std::vector<Point> v{pt(0, -1)};
    for (int i = 1; i <= m; ++i) v.push_back(pt(i, static_cast<long>(i) * i));
    std::vector<Edge> e;
    for (VertexId leaf = 1; leaf <= static_cast<VertexId>(m); ++leaf) e.push_back(straight(v, 0, leaf));
    return Drawing(v, e);
}

Drawing pentagram() {
    std::vector<Point> v{pt(0, 10), pt(10, 3), pt(6, -8), pt(-6, -8), pt(-10, 3)};
    std::vector<Edge> e;
    for (VertexId i = 0; i < 5; ++i) e.push_back(straight(v, i, (i + 2) % 5));
    return Drawing(v, e);
}

Drawing star_polygon(int n) {
    std::vector<Point> v;
    for (int m = 0; m < n; ++m) v.push_back(circle_point(m, n));
    const int step = (n - 1) / 2;
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.push_back(straight(v, static_cast<VertexId>(i), static_cast<VertexId>((i + step) % n)));
    }
    return Drawing(v, e);
}

std::vector<NamedDrawing> thrackle_family() {
    std::vector<NamedDrawing> out;
    out.push_back({"pentagram", pentagram()});
    for (int n = 5; n <= 15; n += 2) {
        const Drawing full = star_polygon(n);
        out.push_back({"star_polygon_" + std::to_string(n), full});
        // Any edge subset of a thrackle drawing is one.
        std::vector<Edge> path(full.edges().begin(), full.edges().end() - 1);
        out.push_back({"star_path_" + std::to_string(n), Drawing(full.vertices(), path)});
        std::vector<Edge> sparse;
        for (std::size_t i = 0; i < full.edge_count(); i += 2) sparse.push_back(full.edge(static_cast<EdgeId>(i)));
        out.push_back({"star_alternate_" + std::to_string(n), Drawing(full.vertices(), sparse)});
    }
    for (int m = 1; m <= 4; ++m) out.push_back({"star_k1_" + std::to_string(m), star(m)});
    return out;
}

Drawing empty_lens() {
    std::vector<Point> v{pt(0, 0), pt(4, 0)};
    return Drawing(v, {{0, 1, {v[0], pt(2, 1), v[1]}}, {0, 1, {v[0], pt(2, -1), v[1]}}});
}

Drawing crossing_parallel_pair() {
    std::vector<Point> v{pt(0, 0), pt(6, 0), pt(3, 5)};
    return Drawing(v, {{0, 1, {v[0], pt(2, 2), pt(4, -2), v[1]}},
                       {0, 1, {v[0], pt(2, -2), pt(4, 2), v[1]}}});
}

} // namespace lensgraph::testing
