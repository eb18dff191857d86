#include "lensgraph/errors.hpp"
#include "lensgraph/generators.hpp"
#include "lensgraph/lenses.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lensgraph;

namespace {

Point P(long x, long y) { return {Rational(x), Rational(y)}; }

bool has_kind(const SeparatedVerdict& v, SeparationViolationKind k) {
    return std::any_of(v.violations.begin(), v.violations.end(),
                       [&](const SeparationViolation& x) { return x.kind == k; });
}

} // namespace

TEST_SUITE("lenses") {

TEST_CASE("parallel classes") {
    const auto nested = parallel_classes(gen_nested_lenses(4));
    REQUIRE(nested.size() == 1);
    CHECK(nested[0].edges.size() == 4);
    const auto k4 = parallel_classes(testing::convex_k4());
    CHECK(k4.size() == 6);
    CHECK(std::all_of(k4.begin(), k4.end(), [](const ParallelClass& c) { return c.edges.size() == 1; }));
    // semicircle(3): edges (1,1,2), (1,1,3), (1,2,3), (2,2,3)
    const auto semi = parallel_classes(gen_semicircle(3));
    const auto it = std::find_if(semi.begin(), semi.end(), [](const ParallelClass& c) { return c.a == 0 && c.b == 2; });
    REQUIRE(it != semi.end());
    CHECK(it->edges.size() == 2);
}

TEST_CASE("lens enumeration") {
    const auto nested = lenses(gen_nested_lenses(4));
    CHECK(nested.size() == 3);
    for (const auto& l : nested) CHECK(l.size() == 1);
    CHECK(lenses(testing::convex_k4()).empty());

    const auto semi = lenses(gen_semicircle(3));
    REQUIRE(semi.size() == 1);
    CHECK(semi[0].a == 0);
    CHECK(semi[0].b == 2);
    CHECK(semi[0].interior_vertices == std::vector<VertexId>{1});
}

TEST_CASE("each class of size j gives j - 1 lenses") {
    for (const Drawing& d : {gen_semicircle(5), gen_random_separated(9, 6, 3), gen_nested_lenses(7)}) {
        const auto ls = lenses(d);
        std::size_t expected = 0;
        for (const auto& c : parallel_classes(d)) expected += c.edges.size() - 1;
        CHECK(ls.size() == expected);
    }
}

TEST_CASE("lens interiors of one class are disjoint") {
    const Drawing d = gen_nested_lenses(6);
    const auto ls = lenses(d);
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            for (VertexId v : ls[i].interior_vertices) {
                CHECK(std::find(ls[j].interior_vertices.begin(), ls[j].interior_vertices.end(), v) ==
                      ls[j].interior_vertices.end());
            }
        }
    }
}

TEST_CASE("separated verdicts") {
    for (int k = 2; k <= 6; ++k) {
        const auto v = separated_verdict(gen_nested_lenses(k));
        CHECK(v.separated);
        CHECK(v.single_crossing);
    }
    const auto semi = separated_verdict(gen_semicircle(6));
    CHECK(semi.separated);
    CHECK_FALSE(semi.single_crossing);
    CHECK(has_kind(semi, SeparationViolationKind::DoubleCrossingPair));

    const Drawing nested3 = gen_nested_lenses(3);
    const auto removed = separated_verdict(without_vertex(nested3, 2));
    CHECK_FALSE(removed.separated);
    CHECK(has_kind(removed, SeparationViolationKind::EmptyLens));

    const auto crossing = separated_verdict(testing::crossing_parallel_pair());
    CHECK_FALSE(crossing.separated);
    CHECK(has_kind(crossing, SeparationViolationKind::CrossingParallelPair));
    CHECK_THROWS_AS(lenses(testing::crossing_parallel_pair()), CrossingParallelPair);
}

TEST_CASE("adding a vertex inside an empty lens repairs it") {
    const Drawing d = testing::empty_lens();
    CHECK_FALSE(separated_verdict(d).separated);
    const Drawing fixed = with_vertices(d, std::vector<Point>{P(2, 0)});
    CHECK(separated_verdict(fixed).separated);
    const Drawing outside = with_vertices(d, std::vector<Point>{P(9, 9)});
    CHECK_FALSE(separated_verdict(outside).separated);
}

TEST_CASE("lens table subsets") {
    const Drawing d = gen_nested_lenses(4);
    const auto cls = parallel_classes(d).at(0);
    const ClassLensTable table(d, cls, count_crossings(d));
    CHECK(table.lens_pairs(table.full_mask()).size() == 3);
    // arcs 0 and 2 only: their lens holds witnesses 2 and 3
    const auto pairs = table.lens_pairs(0b0101);
    REQUIRE(pairs.size() == 1);
    CHECK(table.interior(0, 2).size() == 2);
    CHECK(table.separated_with(0b0101, [](VertexId v) { return v == 3; }));
    CHECK_FALSE(table.separated_with(0b0011, [](VertexId v) { return v == 3; }));
}

TEST_CASE("other classes may slice through a lens") {
    // Edge 2-3 crosses both arcs of the 0-1 class.
    const Drawing d({P(0, 0), P(6, 0), P(2, -3), P(4, 3), P(2, 0)},
                    {{0, 1, {P(0, 0), P(3, 1), P(6, 0)}},
                     {0, 1, {P(0, 0), P(3, -1), P(6, 0)}},
                     {2, 3, {P(2, -3), P(4, 3)}}});
    REQUIRE(d.validation().ok);
    const auto ls = lenses(d);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].interior_vertices == std::vector<VertexId>{4});
}

}
