// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "lensgraph/bounds.hpp"
#include "lensgraph/crossings.hpp"
#include "lensgraph/generators.hpp"
#include "lensgraph/lenses.hpp"
#include "lensgraph/replay.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <fmt/core.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace lensgraph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    fmt::print("[{}] {}. {}: {}\n", o.pass ? "PASS" : "FAIL", id, title, o.detail);
    std::fflush(stdout);
}

struct Instance {
    std::string name;
    Drawing drawing;
};

/// Separated single-crossing drawings with n <= 12.
std::vector<Instance> corpus() {
    std::vector<Instance> out;
    for (int k = 1; k <= 11; ++k) out.push_back({"nested" + std::to_string(k), gen_nested_lenses(k)});
    for (int n = 3; n <= 12; ++n) out.push_back({"convex" + std::to_string(n), gen_convex_complete(n)});
    for (auto& [name, d] : testing::thrackle_family()) {
        if (d.vertex_count() <= 12) out.push_back({name, d});
    }
    for (std::uint64_t seed = 0; seed < 480; ++seed) {
        const int n = 3 + static_cast<int>(seed % 10);
        const int extra = static_cast<int>((seed / 10) % 9);
        out.push_back({fmt::format("random(n={},extra={},seed={})", n, extra, seed),
                       gen_random_separated(n, extra, seed)});
    }
    return out;
}

Outcome kernel_oracle() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<int> half(0, 3);
    auto coord = [&] {
        Rational r = half(rng) == 0 ? Rational(num(rng), 2) : Rational(num(rng) / 2);
        r.canonicalize();
        return r;
    };
    std::size_t pairs = 0, agree = 0, degenerate = 0;
    while (pairs < 1000) {
        const Point a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()}, d{coord(), coord()};
        if (a == b || c == d) continue;
        ++pairs;
        const auto got = segment_intersection(a, b, c, d);
        const auto want = testing::oracle_intersection(a, b, c, d);
        const bool same_point = got.point.has_value() == want.point.has_value() && (!got.point || *got.point == *want.point);
        if (got.tag == want.tag && same_point) ++agree;
        if (want.tag != IntersectionTag::Disjoint && want.tag != IntersectionTag::ProperCross) ++degenerate;
    }
    const double secs = seconds_since(t0);
    return {agree == pairs && secs < 10.0,
            fmt::format("{}/{} pairs agree ({} touching/overlapping), {:.2f} s (limit 10 s)", agree, pairs,
                        degenerate, secs)};
}

Outcome engines_agree() {
    std::size_t checked = 0, mismatches = 0;
    std::string totals;
    const std::size_t expected[] = {1, 5, 15, 35, 70, 126};
    bool convex_ok = true;
    for (int n = 4; n <= 9; ++n) {
        const Drawing d = gen_convex_complete(n);
        const auto naive = count_crossings(d);
        mismatches += !(naive == count_crossings_sweep(d));
        ++checked;
        const auto want = testing::count_four_subsets(static_cast<std::size_t>(n));
        convex_ok = convex_ok && naive.total == want && want == expected[n - 4];
        totals += (totals.empty() ? "" : ",") + std::to_string(naive.total);
    }
    for (int k = 1; k <= 8; ++k) {
        const Drawing d = gen_nested_lenses(k);
        mismatches += !(count_crossings(d) == count_crossings_sweep(d));
        ++checked;
    }
    for (int n = 3; n <= 6; ++n) {
        const Drawing d = gen_semicircle(n);
        mismatches += !(count_crossings(d) == count_crossings_sweep(d));
        ++checked;
    }
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        const Drawing d = gen_random_separated(3 + static_cast<int>(seed % 10), static_cast<int>(seed % 8), seed);
        mismatches += !(count_crossings(d) == count_crossings_sweep(d));
        ++checked;
    }
    return {mismatches == 0 && convex_ok,
            fmt::format("{} drawings, {} report mismatches; convex K4..K9 totals {} (C(n,4): 1,5,15,35,70,126)",
                        checked, mismatches, totals)};
}

Outcome semicircle_certified() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 3; n <= 6; ++n) {
        const Drawing d = gen_semicircle(n);
        const auto r = count_crossings(d);
        const auto v = separated_verdict(d, r);
        std::size_t parallel_crossings = 0;
        for (const auto& cls : parallel_classes(d)) {
            for (std::size_t i = 0; i < cls.edges.size(); ++i) {
                for (std::size_t j = i + 1; j < cls.edges.size(); ++j) parallel_crossings += r.count(cls.edges[i], cls.edges[j]);
            }
        }
        const std::size_t want_e = testing::semicircle_edge_count(static_cast<std::size_t>(n));
        const bool edges_ok = d.edge_count() == want_e && want_e == static_cast<std::size_t>((n * n * n - n) / 6);
        const bool max_ok = n >= 5 ? r.max_pair == 2 : r.max_pair <= 2;
        ok = ok && d.validation().ok && edges_ok && v.separated && max_ok && parallel_crossings == 0;
        detail += fmt::format("n={}: |E|={} sep={} max_pair={} parallel_crossings={}; ", n, d.edge_count(),
                              v.separated, r.max_pair, parallel_crossings);
    }
    const double secs = seconds_since(t0);
    return {ok && secs < 30.0, detail + fmt::format("{:.2f} s (limit 30 s)", secs)};
}

Outcome lemma2_property(const std::vector<Instance>& extra) {
    std::size_t premise = 0, violations = 0;
    bool pentagram_ok = false;
    for (const auto& [name, d] : testing::thrackle_family()) {
        const auto t = thrackle_check(d);
        if (t.premise_holds) {
            ++premise;
            if (!t.bound_holds) ++violations;
        }
        if (name == "pentagram") pentagram_ok = t.premise_holds && t.bound_holds;
    }
    const std::size_t constructed = premise;
    for (const auto& inst : extra) {
        const auto t = thrackle_check(inst.drawing);
        if (t.premise_holds) {
            ++premise;
            if (!t.bound_holds) ++violations;
        }
    }
    return {pentagram_ok && constructed >= 21 && violations == 0,
            fmt::format("pentagram ok={}, {} constructed + {} corpus premise instances, {} violations of e <= 4n",
                        pentagram_ok, constructed, premise - constructed, violations)};
}

Outcome corpus_laws(const std::vector<Instance>& cps) {
    std::size_t eligible = 0, cap_fail = 0, euler_fail = 0, not_eligible = 0;
    for (const auto& inst : cps) {
        const auto& d = inst.drawing;
        if (d.vertex_count() > 12 || d.vertex_count() < 2) continue;
        const auto r = check_drawing_bounds(d);
        if (!r.separated || !r.single_crossing) {
            ++not_eligible;
            continue;
        }
        ++eligible;
        cap_fail += r.edge_cap != Verdict::Holds;
        euler_fail += r.euler != Verdict::Holds;
    }
    return {eligible >= 500 && cap_fail == 0 && euler_fail == 0 && not_eligible == 0,
            fmt::format("{} separated single-crossing instances (n <= 12), {} edge-cap violations, {} Euler "
                        "violations, {} generated instances not separated single-crossing",
                        eligible, cap_fail, euler_fail, not_eligible)};
}

Outcome replay_integrity(const std::vector<Instance>& cps) {
    std::size_t instances = 0, failed = 0, trials = 0, lemma3_fail = 0, stats_flags = 0, stats_runs = 0;
    constexpr std::size_t kTrials = 60;
    std::string first_failure;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const auto& d = cps[i].drawing;
        const auto t = replay_theorem1(d, 1000 + i, kTrials);
        ++instances;
        if (!t.ok()) {
            ++failed;
            if (first_failure.empty()) first_failure = cps[i].name;
        }
        trials += t.trials.size();
        for (const auto& tr : t.trials) lemma3_fail += !tr.lemma3_ok;
        const auto s = sampling_statistics(d, 5000 + i, 400);
        ++stats_runs;
        stats_flags += !s.w_within_4se;
    }
    return {failed == 0 && lemma3_fail == 0 && trials >= 10000 && stats_flags == 0,
            fmt::format("{} instances, {} with failing checkpoints{}; {} sampled trials, {} Lemma 3 failures; "
                        "mean |W| within 4 SE of pn on {}/{} instances",
                        instances, failed, first_failure.empty() ? "" : " (first: " + first_failure + ")", trials,
                        lemma3_fail, stats_runs - stats_flags, stats_runs)};
}

Outcome bisection_exactness(const std::vector<Instance>& cps) {
    std::size_t compared = 0, mismatches = 0, lemma4_checked = 0, lemma4_fail = 0;
    std::vector<Drawing> small{testing::star_k14(), testing::convex_k4(), testing::empty_lens(),
                               testing::crossing_parallel_pair(), gen_semicircle(3), gen_convex_complete(5)};
    for (const auto& inst : cps) small.push_back(inst.drawing);
    const std::size_t star = bisection_width_exact(testing::star_k14()).width;
    const std::size_t k4 = bisection_width_exact(testing::convex_k4()).width;
    for (const auto& d : small) {
        if (d.vertex_count() < 2 || d.vertex_count() > kBisectionMaxVertices || d.edge_count() > kBisectionMaxEdges) {
            continue;
        }
        const auto r = bisection_width_exact(d);
        if (d.edge_count() <= 10) {
            ++compared;
            if (r.width != testing::brute_force_bisection_width(d) || !verify_bisection(d, r)) ++mismatches;
        }
        const auto v = separated_verdict(d);
        if (v.separated && v.single_crossing) {
            ++lemma4_checked;
            lemma4_fail += !check_lemma4(d).holds;
        }
    }
    return {mismatches == 0 && star == 1 && k4 == 3 && lemma4_fail == 0 && compared > 0,
            fmt::format("{} instances with e <= 10 vs brute force, {} mismatches; b(K1,4)={} b(convex K4)={}; "
                        "Lemma 4 on {} exhaustive-mode instances, {} failures",
                        compared, mismatches, star, k4, lemma4_checked, lemma4_fail)};
}

Outcome decompose_integrity(const std::vector<Instance>& cps) {
    std::size_t runs = 0, failed = 0, splits = 0, forced = 0;
    std::string first_failure;
    for (const auto& inst : cps) {
        const auto& d = inst.drawing;
        if (d.vertex_count() < 2 || d.vertex_count() > kBisectionMaxVertices || d.edge_count() > kBisectionMaxEdges ||
            d.edge_count() == 0) {
            continue;
        }
        // c(G) < k e(G) for k = c(G) + 1 whenever e >= 1: the root must split.
        const Rational k(static_cast<unsigned long>(count_crossings(d).total + 1));
        DecomposeOptions opts;
        opts.require_degree_cap = false;
        const auto t = decompose(d, k, opts);
        ++runs;
        if (t.families.at(0).members.at(0).split) ++forced;
        for (const auto& step : t.families) {
            for (const auto& m : step.members) splits += m.split;
        }
        if (!t.ok()) {
            ++failed;
            if (first_failure.empty()) first_failure = inst.name;
        }
    }
    return {failed == 0 && runs > 0 && forced == runs,
            fmt::format("{} decompositions ({} with a forced root split), {} split steps, {} with failing "
                        "checkpoints{}",
                        runs, forced, splits, failed, first_failure.empty() ? "" : " (first: " + first_failure + ")")};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string capture(const std::string& args) {
    const std::string cmd = std::string(LENSGRAPH_CLI) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

Outcome cli_determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "lensgraph_acceptance";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "a.json").string();
    const std::string b = (dir / "b.json").string();
    std::size_t compared = 0, differing = 0;
    auto same = [&](const std::string& x, const std::string& y) {
        ++compared;
        if (x != y || x.empty()) ++differing;
    };
    const std::vector<std::string> gens{"--family random --n 9 --extra-parallel 5 --seed 17",
                                        "--family random --n 12 --extra-parallel 8", "--family semicircle --n 5",
                                        "--family nested --k 6", "--family convex --n 7"};
    for (const auto& g : gens) {
        capture("gen " + g + " -o " + a);
        capture("gen " + g + " -o " + b);
        same(read_file(a), read_file(b));
        for (const std::string cmd : {"cross --json", "cross --engine naive --json", "validate --json",
                                      "check --json"}) {
            same(capture(cmd + " " + a), capture(cmd + " " + b));
        }
    }
    capture("gen --family random --n 10 --extra-parallel 6 --seed 3 -o " + a);
    for (const std::string cmd : {"replay --seed 42 --trials 200 --stats --json", "replay --trials 50 --json",
                                  "lenses --json"}) {
        same(capture(cmd + " " + a), capture(cmd + " " + a));
    }
    capture("gen --family convex --n 5 -o " + a);
    same(capture("decompose --k-override 7 --json " + a), capture("decompose --k-override 7 --json " + a));
    same(capture("bisect --json " + a), capture("bisect --json " + a));
    same(capture("render --shade-lenses --show-crossings " + a), capture("render --shade-lenses --show-crossings " + a));
    return {differing == 0, fmt::format("{} repeated CLI outputs compared, {} differ", compared, differing)};
}

} // namespace

int main() {
    const auto t0 = Clock::now();
    const auto instances = corpus();
    report(1, "kernel oracle equivalence", kernel_oracle);
    report(2, "crossing engines agree", engines_agree);
    report(3, "semicircle construction certified", semicircle_certified);
    report(4, "Lemma 2 as a property", [&] { return lemma2_property(instances); });
    report(5, "Theorem 1 and Euler bound over the corpus", [&] { return corpus_laws(instances); });
    report(6, "replay integrity", [&] { return replay_integrity(instances); });
    report(7, "bisection exactness", [&] { return bisection_exactness(instances); });
    report(8, "decompose integrity", [&] { return decompose_integrity(instances); });
    report(9, "CLI determinism", cli_determinism);
    fmt::print("{} of 9 criteria failed; {:.1f} s total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
