#include "lensgraph/bounds.hpp"
#include "lensgraph/crossings.hpp"
#include "lensgraph/drawing_io.hpp"
#include "lensgraph/errors.hpp"
#include "lensgraph/generators.hpp"
#include "lensgraph/lenses.hpp"
#include "lensgraph/replay.hpp"
#include "lensgraph/svg.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace lensgraph;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
    std::string input;
    std::string output;
    bool json = false;

    std::string family = "nested";
    int n = 4;
    int k = 3;
    std::uint64_t seed = 0;
    int segments = 32;
    int extra_parallel = 0;

    std::string engine = "sweep";
    std::string crossing_constant = "1/64";
    std::size_t trials = 100;
    bool stats = false;
    std::string k_override;
    bool no_degree_cap = false;
    bool shade_lenses = false;
    bool show_crossings = false;
};

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

void print_checkpoints(const std::vector<Checkpoint>& cps) {
    fmt::print("{:<36} {:>14} {:^3} {:<28} {}\n", "checkpoint", "lhs", "rel", "rhs", "result");
    for (const auto& c : cps) {
        const char* result = c.pass ? "pass" : (c.informational ? "info-fail" : "FAIL");
        fmt::print("{:<36} {:>14} {:^3} {:<28} {}\n", c.name, c.lhs, c.relation, c.rhs, result);
    }
}

int run_gen(const Options& o) {
    GeneratorSpec spec;
    spec.family = parse_family(o.family);
    spec.n = o.n;
    spec.k = o.k;
    spec.seed = o.seed;
    spec.segments_per_arc = o.segments;
    spec.extra_parallel = o.extra_parallel;
    write_text(o.output, save_drawing(generate(spec)));
    return kOk;
}

int run_validate(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    const auto& report = d.validation();
    if (o.json) {
        emit(validation_to_json(report));
    } else {
        fmt::print("n={} e={} segments={} valid={}\n", d.vertex_count(), d.edge_count(), d.segment_count(),
                   report.ok);
        for (const auto& v : report.violations) {
            std::string edges;
            for (EdgeId id : v.edges) edges += (edges.empty() ? "" : ",") + std::to_string(id);
            fmt::print("  {} edges=[{}]{}{}\n", to_string(v.kind), edges,
                       v.witness ? " at " + to_string(*v.witness) : "",
                       v.vertex ? " vertex " + std::to_string(*v.vertex) : "");
        }
    }
    return report.ok ? kOk : kCheckFailed;
}

int run_cross(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    CrossingReport r;
    if (o.engine == "naive") r = count_crossings(d);
    else if (o.engine == "sweep") r = count_crossings_sweep(d);
    else throw DomainError("unknown engine '" + o.engine + "' (expected naive or sweep)");
    if (o.json) {
        emit(crossings_to_json(r));
    } else {
        fmt::print("total={} max_pair={} crossing_pairs={}\n", r.total, r.max_pair, r.pair_counts.size());
        for (const auto& [pair, c] : r.pair_counts) fmt::print("  {}-{}: {}\n", pair.first, pair.second, c);
    }
    return kOk;
}

int run_lenses(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    const auto report = count_crossings(d);
    const auto ls = lenses(d, report);
    if (o.json) {
        emit(lenses_to_json(ls));
    } else {
        fmt::print("lenses={}\n", ls.size());
        for (const auto& l : ls) {
            fmt::print("  edges {}-{} between {} and {}: {} interior vertices\n", l.bounding.first,
                       l.bounding.second, l.a, l.b, l.size());
        }
    }
    return kOk;
}

int run_check(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    const BoundReport r = check_drawing_bounds(d, parse_rational(o.crossing_constant));
    const auto verdict = separated_verdict(d);
    if (o.json) {
        emit({{"verdict", verdict_to_json(verdict)}, {"bounds", bounds_to_json(r)}, {"ok", r.theorems_hold()}});
    } else {
        const auto& v = r.values;
        fmt::print("n={} e={} m={} cr={}\n", v.n, v.e, v.m, r.cr_actual);
        fmt::print("separated={} single_crossing={}\n", verdict.separated, verdict.single_crossing);
        for (const auto& x : verdict.violations) {
            std::string edges;
            for (EdgeId id : x.edges) edges += (edges.empty() ? "" : ",") + std::to_string(id);
            fmt::print("  {} edges=[{}]\n", to_string(x.kind), edges);
        }
        fmt::print("classic crossing lemma:    {}\n", to_string(r.classic));
        fmt::print("multigraph crossing lemma: {}\n", to_string(r.multigraph));
        fmt::print("theorem1 edge cap:         {} (e={} vs {} ~ {:.6g})\n", to_string(r.edge_cap), v.e,
                   v.edge_cap.to_string(), v.edge_cap.approx());
        fmt::print("euler lower bound:         {} (cr={} vs e-3n={})\n", to_string(r.euler), r.cr_actual,
                   to_string(v.euler_lower));
        fmt::print("corollary:                 {}\n", to_string(r.corollary));
    }
    return r.theorems_hold() ? kOk : kCheckFailed;
}

int run_bisect(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    const BisectionResult b = bisection_width_exact(d);
    const bool verified = verify_bisection(d, b);
    std::optional<Lemma4Check> lemma4;
    const auto verdict = separated_verdict(d);
    if (verdict.separated && verdict.single_crossing) lemma4 = check_lemma4(d);
    const bool ok = verified && (!lemma4 || lemma4->holds);
    if (o.json) {
        emit({{"bisection", bisection_to_json(b)},
              {"verified", verified},
              {"lemma4", lemma4 ? lemma4_to_json(*lemma4) : nlohmann::json(nullptr)},
              {"ok", ok}});
    } else {
        auto list = [](const auto& xs) {
            std::string s;
            for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
            return "[" + s + "]";
        };
        fmt::print("width={} part1={} part2={} deleted={} verified={}\n", b.width, list(b.part1), list(b.part2),
                   list(b.deleted_edges), verified);
        if (lemma4) {
            fmt::print("lemma4: {} <= 22*sqrt({}) ~ {:.6g}: {}\n", lemma4->lhs, lemma4->radicand.get_str(),
                       lemma4->rhs, lemma4->holds ? "holds" : "FAILS");
        } else {
            fmt::print("lemma4: not-applicable\n");
        }
    }
    return ok ? kOk : kCheckFailed;
}

int run_replay(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    const ReplayTrace t = replay_theorem1(d, o.seed, o.trials);
    std::optional<SamplingSummary> stats;
    if (o.stats) stats = sampling_statistics(d, o.seed, std::max<std::size_t>(o.trials, 1));
    if (o.json) {
        auto j = replay_to_json(t);
        if (stats) j["sampling"] = sampling_to_json(*stats);
        emit(j);
    } else {
        fmt::print("branch={} |L|={} t={} chosen_k={} heavy_vertex={} d_k={} |L^o|={} trials={}\n",
                   to_string(t.branch), t.lens_total, t.t, t.chosen_k ? std::to_string(*t.chosen_k) : "-",
                   t.heavy_vertex ? std::to_string(*t.heavy_vertex) : "-", t.heavy_count, t.origin_lens_count,
                   t.trials.size());
        print_checkpoints(t.checkpoints);
        if (stats) {
            fmt::print("sampling: p={} mean|W|={:.6g} pn={:.6g} se={:.3g} within4se={} mean|L^o(W)|={:.6g} "
                       "expected={} lower_bound={}\n",
                       to_string(stats->p), stats->mean_w, stats->expected_w, stats->standard_error,
                       stats->w_within_4se, stats->mean_empty, to_string(stats->expected_empty),
                       to_string(stats->class_lower_bound));
        }
    }
    return t.ok() ? kOk : kCheckFailed;
}

int run_decompose(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    std::optional<Rational> k;
    if (!o.k_override.empty()) k = parse_rational(o.k_override);
    DecomposeOptions opts;
    opts.require_degree_cap = !o.no_degree_cap;
    const DecompositionTrace t = decompose(d, k, opts);
    if (o.json) {
        emit(decomposition_to_json(t));
    } else {
        fmt::print("n={} e={} delta={} k={} ~ {:.6g} stop_step={} ({}) deleted={} heavy_edges={}\n", t.n, t.e,
                   t.delta, t.k_threshold.to_string(), t.k_threshold.approx(), t.stop_step, t.stop_reason,
                   t.edges_deleted_total, t.final_heavy_edges);
        for (const auto& note : t.notes) fmt::print("note: {}\n", note);
        for (const auto& step : t.families) {
            fmt::print("F{}:", step.index);
            for (const auto& m : step.members) {
                fmt::print(" (v={} e={} c={} {})", m.vertices.size(), m.edges.size(), m.c,
                           m.split ? "split b=" + std::to_string(*m.width) : "kept");
            }
            fmt::print("\n");
        }
        print_checkpoints(t.checkpoints);
    }
    return t.ok() ? kOk : kCheckFailed;
}

int run_render(const Options& o) {
    const Drawing d = load_drawing_file(o.input);
    SvgOptions svg;
    if (o.shade_lenses || o.show_crossings) {
        const auto report = count_crossings(d);
        if (o.shade_lenses) {
            for (const auto& l : lenses(d, report)) svg.shaded_regions.push_back(l.region);
        }
        if (o.show_crossings) {
            for (const auto& c : report.crossing_points) svg.highlighted_points.push_back(c.point);
        }
    }
    write_text(o.output, render_svg(d, svg));
    return kOk;
}

int report_error(const Options& o, const char* code, const std::exception& e) {
    if (o.json) {
        nlohmann::json err = {{"code", code}, {"message", e.what()}};
        if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
            if (p->line() > 0) err["line"] = p->line();
            if (!p->field().empty()) err["field"] = p->field();
        }
        emit({{"error", err}});
    } else {
        std::cerr << "error [" << code << "]: " << e.what() << '\n';
    }
    return kUsage;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for separated single-crossing multigraph drawings"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", o.input, "Drawing JSON file")->required();
        cmd->add_flag("--json", o.json, "Machine-readable output");
    };

    auto* gen = app.add_subcommand("gen", "Generate a drawing");
    gen->add_option("--family", o.family, "semicircle | nested | convex | random")->required();
    gen->add_option("--n", o.n, "Vertex count (semicircle, convex, random)");
    gen->add_option("--k", o.k, "Nesting depth (nested)");
    gen->add_option("--seed", o.seed, "Random seed (random)");
    gen->add_option("--segments", o.segments, "Chords per semicircle (semicircle)");
    gen->add_option("--extra-parallel", o.extra_parallel, "Parallel companions to attempt (random)");
    gen->add_option("-o,--output", o.output, "Output file (default stdout)");
    gen->add_flag("--json", o.json, "JSON error objects");

    auto* validate = app.add_subcommand("validate", "General-position check");
    add_input(validate);

    auto* cross = app.add_subcommand("cross", "Count crossings");
    add_input(cross);
    cross->add_option("--engine", o.engine, "naive | sweep")->check(CLI::IsMember({"naive", "sweep"}));

    auto* lens = app.add_subcommand("lenses", "List lenses");
    add_input(lens);

    auto* check = app.add_subcommand("check", "Separation verdict and bound verdicts");
    add_input(check);
    check->add_option("--c", o.crossing_constant, "Crossing-lemma constant (rational)");

    auto* bisect = app.add_subcommand("bisect", "Exact topological bisection width");
    add_input(bisect);

    auto* replay = app.add_subcommand("replay", "Replay the lens-counting argument");
    add_input(replay);
    replay->add_option("--seed", o.seed, "Sampling seed");
    replay->add_option("--trials", o.trials, "Number of sampled subsets");
    replay->add_flag("--stats", o.stats, "Also report sampling statistics");

    auto* decomp = app.add_subcommand("decompose", "Recursive bisection process");
    add_input(decomp);
    decomp->add_option("--k-override", o.k_override, "Crossing threshold (rational)");
    decomp->add_flag("--no-degree-cap", o.no_degree_cap, "Do not require max degree <= ceil(2e/n)");

    auto* render = app.add_subcommand("render", "Render an SVG");
    render->add_option("file", o.input, "Drawing JSON file")->required();
    render->add_option("-o,--output", o.output, "Output SVG (default stdout)");
    render->add_flag("--shade-lenses", o.shade_lenses, "Shade lens regions");
    render->add_flag("--show-crossings", o.show_crossings, "Mark crossing points");
    render->add_flag("--json", o.json, "JSON error objects");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*gen) return run_gen(o);
        if (*validate) return run_validate(o);
        if (*cross) return run_cross(o);
        if (*lens) return run_lenses(o);
        if (*check) return run_check(o);
        if (*bisect) return run_bisect(o);
        if (*replay) return run_replay(o);
        if (*decomp) return run_decompose(o);
        if (*render) return run_render(o);
    } catch (const Error& e) {
        return report_error(o, e.code(), e);
    } catch (const std::exception& e) {
        return report_error(o, "InternalError", e);
    }
    return kUsage;
}
