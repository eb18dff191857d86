#include "lensgraph/bounds.hpp"
#include "lensgraph/errors.hpp"
#include "lensgraph/generators.hpp"
#include "lensgraph/lenses.hpp"
#include "lensgraph/replay.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace lensgraph;

namespace {

const Checkpoint& find(const std::vector<Checkpoint>& cps, const std::string& name) {
    const auto it = std::find_if(cps.begin(), cps.end(), [&](const Checkpoint& c) { return c.name == name; });
    REQUIRE(it != cps.end());
    return *it;
}

bool has(const std::vector<Checkpoint>& cps, const std::string& name) {
    return std::any_of(cps.begin(), cps.end(), [&](const Checkpoint& c) { return c.name == name; });
}

} // namespace

TEST_SUITE("replay") {

TEST_CASE("checkpoints compare exactly") {
    CHECK(make_checkpoint("a", Rational(1, 3), "<=", Rational(1, 3)).pass);
    CHECK_FALSE(make_checkpoint("a", Rational(1, 3), "<", Rational(1, 3)).pass);
    CHECK(make_checkpoint("a", Rational(2), "<", LogTerm::times_log2(Rational(1), Rational(5))).pass);
    const auto info = make_checkpoint("a", Rational(9), "<=", Rational(1), true);
    CHECK_FALSE(info.pass);
    CHECK(checkpoints_pass({info}));
}

TEST_CASE("nested lenses replay") {
    const auto t = replay_theorem1(gen_nested_lenses(6), 7, 100);
    CHECK(t.lens_total == 5);
    CHECK(t.branch == ReplayBranch::ManyLenses);
    CHECK(t.t == 3);
    CHECK(t.classes == std::vector<std::size_t>{5, 0, 0});
    CHECK(*t.chosen_k == 1);
    REQUIRE(t.heavy_vertex);
    CHECK(*t.heavy_vertex >= 2); // a witness
    CHECK(t.heavy_count == 1);
    CHECK(t.origin_lens_count == 1);
    const auto& final = find(t.checkpoints, "final.origin_lenses");
    CHECK(final.lhs == "1");
    CHECK(final.rhs == "224");
    CHECK(final.pass);
    CHECK(t.trials.size() == 100);
    CHECK(t.ok());
}

TEST_CASE("lens-free drawing takes the few-lenses branch") {
    const auto t = replay_theorem1(gen_convex_complete(5), 0, 10);
    CHECK(t.branch == ReplayBranch::FewLenses);
    CHECK(t.lens_total == 0);
    CHECK(find(t.checkpoints, "few.edges_below_n_squared").pass);
    CHECK_FALSE(has(t.checkpoints, "pigeonhole"));
    CHECK(t.trials.empty());
    CHECK(t.ok());
}

TEST_CASE("replay preconditions") {
    CHECK_THROWS_AS(replay_theorem1(testing::empty_lens(), 0, 1), NotSeparated);
    CHECK_THROWS_AS(replay_theorem1(gen_semicircle(4), 0, 1), NotSingleCrossing);
}

TEST_CASE("trials are reproducible from seed and index") {
    const Drawing d = gen_random_separated(10, 6, 11);
    const auto a = replay_theorem1(d, 99, 20);
    const auto b = replay_theorem1(d, 99, 40);
    for (std::size_t i = 0; i < 20; ++i) CHECK(a.trials[i].w == b.trials[i].w);
    CHECK(replay_to_json(a) == replay_to_json(replay_theorem1(d, 99, 20)));
    const auto c = replay_theorem1(d, 100, 20);
    bool differs = false;
    for (std::size_t i = 0; i < 20; ++i) differs = differs || a.trials[i].w != c.trials[i].w;
    if (a.lens_total > 0) CHECK(differs);
}

TEST_CASE("replay passes on random separated drawings") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Drawing d = gen_random_separated(5 + static_cast<int>(seed % 7), 8, seed);
        const auto t = replay_theorem1(d, seed, 50);
        CAPTURE(seed);
        CHECK(t.ok());
        for (const auto& trial : t.trials) {
            CHECK(trial.lemma3_ok);
            CHECK(trial.lemma2_ok);
        }
    }
}

TEST_CASE("sampling statistics") {
    const auto s = sampling_statistics(gen_nested_lenses(9), 0, 10000);
    CHECK(s.k == 1);
    CHECK(s.p == Rational(1, 2));
    CHECK(s.expected_w == doctest::Approx(5.0));
    CHECK(s.mean_w == doctest::Approx(5.0).epsilon(0.02));
    CHECK(s.w_within_4se);
    CHECK(s.expected_empty == Rational(1, 8));
    CHECK(s.class_lower_bound == Rational(1, 16));
    CHECK(s.expectation_meets_bound);

    const auto certain = sampling_statistics(gen_nested_lenses(9), 3, 50, 0u);
    CHECK(certain.p == Rational(1));
    CHECK(certain.mean_w == doctest::Approx(10.0));

    const auto none = sampling_statistics(gen_convex_complete(5), 3, 200);
    CHECK(none.origin_lens_count == 0);
    CHECK(none.mean_empty == 0.0);
}

TEST_CASE("decompose on convex K4") {
    const auto t = decompose(testing::convex_k4(), Rational(10));
    REQUIRE(t.families.size() >= 2);
    const auto& root = t.families[0].members.at(0);
    CHECK(root.split);
    CHECK(*root.width == 3);
    std::vector<std::size_t> sizes;
    for (const auto& m : t.families[1].members) sizes.push_back(m.vertices.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3});
    CHECK(t.ok());
}

TEST_CASE("decompose with a zero threshold keeps everything") {
    const auto t = decompose(gen_convex_complete(5), Rational(0));
    REQUIRE(t.families.size() == 1);
    CHECK_FALSE(t.families[0].members[0].split);
    CHECK(t.final_heavy_edges == 10);
    CHECK(t.ok());
}

TEST_CASE("decompose nested lenses") {
    const Drawing d = gen_nested_lenses(4);
    CHECK_THROWS_AS(decompose(d, Rational(1)), DegreeTooHigh);
    DecomposeOptions opts;
    opts.require_degree_cap = false;
    const auto t = decompose(d, Rational(1), opts);
    const auto& root = t.families.at(0).members.at(0);
    CHECK(root.split);
    CHECK(*root.width == testing::brute_force_bisection_width(d));
    CHECK(*root.width == 1);
    CHECK_FALSE(t.notes.empty());
    CHECK(t.ok());
}

TEST_CASE("decompose default threshold") {
    const auto t = decompose(gen_convex_complete(5), std::nullopt);
    CHECK_FALSE(t.k_overridden);
    CHECK(t.k_threshold.approx() > 0);
    CHECK(t.k_threshold.approx() < 1e-8);
    CHECK(t.ok());
    const auto sparse = decompose(testing::star_k14(), std::nullopt, {false});
    CHECK(sparse.k_threshold.exact() == Rational(0));
}

TEST_CASE("decompose invariants on random drawings") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Drawing d = gen_random_separated(5 + static_cast<int>(seed % 4), 3, seed);
        if (d.edge_count() > kBisectionMaxEdges) continue;
        const auto t = decompose(d, Rational(static_cast<unsigned long>(count_crossings(d).total + 1)), {false});
        CAPTURE(seed);
        CHECK(t.ok());
        CHECK(has(t.checkpoints, "F0[0].split_conditions"));
    }
}

}
