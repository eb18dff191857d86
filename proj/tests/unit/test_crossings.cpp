#include "lensgraph/crossings.hpp"
#include "lensgraph/errors.hpp"
#include "lensgraph/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lensgraph;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

} // namespace

TEST_SUITE("crossings") {

TEST_CASE("reference counts") {
    const auto k4 = count_crossings(testing::convex_k4());
    CHECK(k4.total == 1);
    CHECK(k4.count(1, 4) == 1); // the two diagonals
    CHECK(k4.crossing_points.at(0).point == P(1, 1));
    const auto penta = count_crossings(testing::pentagram());
    CHECK(penta.total == 5);
    CHECK(is_single_crossing(penta));
    CHECK(count_crossings(gen_nested_lenses(4)).total == 0);
    const auto empty = count_crossings(Drawing({P(0, 0)}, {}));
    CHECK(empty.total == 0);
    CHECK(empty.max_pair == 0);
    CHECK(is_single_crossing(empty));
    CHECK_FALSE(is_single_crossing(count_crossings(gen_semicircle(6))));
}

TEST_CASE("report invariants") {
    const auto r = count_crossings(gen_semicircle(5));
    std::size_t sum = 0, max = 0;
    for (const auto& [pair, c] : r.pair_counts) {
        CHECK(pair.first < pair.second);
        CHECK(c > 0);
        sum += c;
        max = std::max(max, c);
    }
    CHECK(sum == r.total);
    CHECK(max == r.max_pair);
    CHECK(r.crossing_points.size() == r.total);
}

TEST_CASE("adjacent crossings are counted, shared endpoints are not") {
    const Drawing d({P(0, 0), P(4, 0), P(4, 2)},
                    {{0, 1, {P(0, 0), P(2, 2), P(4, 0)}}, {0, 2, {P(0, 0), P(2, -1), P(3, 3), P(4, 2)}}});
    const auto r = count_crossings(d);
    CHECK(r.count(0, 1) == 1);
    CHECK(count_crossings_sweep(d) == r);
}

TEST_CASE("invalid drawings are rejected") {
    const Drawing d({P(0, 0), P(4, 0), P(2, 0)}, {{0, 1, {P(0, 0), P(4, 0)}}});
    CHECK_THROWS_AS(count_crossings(d), InvalidDrawing);
    CHECK_THROWS_AS(count_crossings_sweep(d), InvalidDrawing);
}

TEST_CASE("sweep equals naive") {
    for (int n = 3; n <= 8; ++n) {
        const Drawing d = gen_convex_complete(n);
        const auto r = count_crossings(d);
        CHECK(r.total == testing::count_four_subsets(static_cast<std::size_t>(n)));
        CHECK(count_crossings_sweep(d) == r);
    }
    for (int k = 1; k <= 6; ++k) {
        const Drawing d = gen_nested_lenses(k);
        CHECK(count_crossings_sweep(d) == count_crossings(d));
    }
    for (const Drawing& d : {testing::pentagram(), testing::convex_k4(), testing::star_polygon(9),
                             gen_semicircle(3), gen_semicircle(4)}) {
        CHECK(count_crossings_sweep(d) == count_crossings(d));
    }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Drawing d = gen_random_separated(4 + static_cast<int>(seed % 8), static_cast<int>(seed % 5), seed);
        CHECK(count_crossings_sweep(d) == count_crossings(d));
    }
}

TEST_CASE("sweep handles vertical segments and shared x coordinates") {
    const Drawing d({P(0, 0), P(0, 4), P(-2, 2), P(2, 2), P(-1, 0), P(1, 4)},
                    {{0, 1, {P(0, 0), P(0, 4)}},
                     {2, 3, {P(-2, 2), P(2, 3), P(2, 2)}},
                     {4, 5, {P(-1, 0), P(1, 4)}},
                     {2, 5, {P(-2, 2), P(-1, 5), P(1, 4)}}});
    REQUIRE(d.validation().ok);
    CHECK(count_crossings_sweep(d) == count_crossings(d));
}

TEST_CASE("subdrawings never gain crossings") {
    const Drawing d = gen_semicircle(5);
    const auto full = count_crossings(d);
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < d.vertex_count(); ++v) vs.push_back(v);
    std::vector<EdgeId> es;
    for (EdgeId id = 0; id < d.edge_count(); id += 3) es.push_back(id);
    const auto sub = count_crossings(subdrawing(d, vs, es));
    CHECK(sub.total <= full.total);
    CHECK(sub.total == crossings_within(full, es));
}

TEST_CASE("json keys pairs as i-j") {
    const auto j = crossings_to_json(count_crossings(testing::convex_k4()));
    CHECK(j["total"] == 1);
    CHECK(j["pairs"]["1-4"] == 1);
}

}
