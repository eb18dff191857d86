#include "lensgraph/replay.hpp"

#include "lensgraph/errors.hpp"
#include "lensgraph/lenses.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lensgraph {

namespace {

int sign_of(int c) { return (c > 0) - (c < 0); }

bool relation_holds(int cmp, const std::string& relation) {
    if (relation == "<=") return cmp <= 0;
    if (relation == ">=") return cmp >= 0;
    if (relation == "<") return cmp < 0;
    if (relation == ">") return cmp > 0;
    if (relation == "==") return cmp == 0;
    throw std::logic_error("unknown relation " + relation);
}

} // namespace

Checkpoint make_checkpoint(std::string name, const Rational& lhs, const std::string& relation, const Rational& rhs,
                           bool informational) {
    Checkpoint cp;
    cp.name = std::move(name);
    cp.relation = relation;
    cp.lhs = to_string(lhs);
    cp.rhs = to_string(rhs);
    cp.lhs_approx = to_double(lhs);
    cp.rhs_approx = to_double(rhs);
    cp.pass = relation_holds(sign_of(cmp(lhs, rhs)), relation);
    cp.informational = informational;
    return cp;
}

Checkpoint make_checkpoint(std::string name, const Rational& lhs, const std::string& relation, const LogTerm& rhs,
                           bool informational) {
    Checkpoint cp;
    cp.name = std::move(name);
    cp.relation = relation;
    cp.lhs = to_string(lhs);
    cp.rhs = rhs.to_string();
    cp.lhs_approx = to_double(lhs);
    cp.rhs_approx = rhs.approx();
    cp.pass = relation_holds(-rhs.compare(lhs), relation);
    cp.informational = informational;
    return cp;
}

bool checkpoints_pass(const std::vector<Checkpoint>& cps) {
    return std::all_of(cps.begin(), cps.end(), [](const Checkpoint& c) { return c.pass || c.informational; });
}

const char* to_string(ReplayBranch b) { return b == ReplayBranch::FewLenses ? "few-lenses" : "many-lenses"; }

namespace {

Rational q(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

std::size_t ceil_log2(std::size_t n) {
    std::size_t t = 0;
    while ((std::size_t{1} << t) < n) ++t;
    return t;
}

std::size_t floor_log2(std::size_t x) {
    std::size_t r = 0;
    while (x >>= 1) ++r;
    return r;
}

/// Lens classes, the chosen class and its heavy vertex.
struct LensAnalysis {
    CrossingReport report;
    std::vector<LensRecord> lenses;
    std::size_t t = 0;
    std::vector<std::size_t> class_of;       // per lens, 1-based
    std::vector<std::size_t> class_sizes;    // index i - 1
    std::optional<unsigned> k;
    std::optional<VertexId> heavy;
    std::size_t heavy_count = 0;
    std::vector<std::size_t> origin;         // indices into lenses
};

LensAnalysis analyse(const Drawing& d, std::optional<unsigned> k_override) {
    d.require_valid();
    const std::size_t n = d.vertex_count();
    if (n < 2) throw DomainError("replay needs n >= 2");
    LensAnalysis a;
    a.report = count_crossings(d);
    const auto verdict = separated_verdict(d, a.report);
    if (!verdict.separated) throw NotSeparated("drawing is not separated");
    if (!verdict.single_crossing) throw NotSingleCrossing("drawing is not single-crossing");
    a.lenses = lenses(d, a.report);

    a.t = ceil_log2(n);
    std::size_t top = a.t;
    for (const auto& lens : a.lenses) {
        const std::size_t cls = floor_log2(lens.size()) + 1;
        a.class_of.push_back(cls);
        top = std::max(top, cls);
    }
    a.class_sizes.assign(top, 0);
    for (std::size_t c : a.class_of) ++a.class_sizes[c - 1];

    if (k_override) {
        a.k = *k_override;
    } else if (!a.lenses.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < a.class_sizes.size(); ++i) {
            if (a.class_sizes[i] > a.class_sizes[best]) best = i;
        }
        a.k = static_cast<unsigned>(best + 1);
    }
    if (!a.k || *a.k == 0 || *a.k > a.class_sizes.size()) return a;

    std::vector<std::size_t> count(n, 0);
    for (std::size_t i = 0; i < a.lenses.size(); ++i) {
        if (a.class_of[i] != *a.k) continue;
        for (VertexId v : a.lenses[i].interior_vertices) ++count[v];
    }
    const auto best = std::max_element(count.begin(), count.end());
    if (*best == 0) return a;
    a.heavy = static_cast<VertexId>(best - count.begin());
    a.heavy_count = *best;
    for (std::size_t i = 0; i < a.lenses.size(); ++i) {
        if (a.class_of[i] != *a.k) continue;
        const auto& inner = a.lenses[i].interior_vertices;
        if (std::find(inner.begin(), inner.end(), *a.heavy) != inner.end()) a.origin.push_back(i);
    }
    return a;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial) {
    const auto index = static_cast<std::uint64_t>(trial);
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index & 0xffffffffU), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

/// Each vertex independently with probability 2^-k: the top k bits of one
/// 64-bit draw per vertex must all be zero.
std::vector<bool> sample_w(std::size_t n, unsigned k, std::uint64_t seed, std::size_t trial) {
    auto eng = trial_engine(seed, trial);
    std::vector<bool> in(n, false);
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t draw = eng();
        in[v] = k == 0 || (draw >> (64 - k)) == 0;
    }
    return in;
}

bool lens_empty_in(const LensRecord& lens, const std::vector<bool>& in) {
    if (!in[lens.a] || !in[lens.b]) return false;
    return std::none_of(lens.interior_vertices.begin(), lens.interior_vertices.end(),
                        [&](VertexId v) { return in[v]; });
}

ReplayTrial run_trial(const Drawing& d, const LensAnalysis& a, unsigned k, std::uint64_t seed, std::size_t index) {
    ReplayTrial trial;
    trial.index = index;
    const auto in = sample_w(d.vertex_count(), k, seed, index);
    for (VertexId v = 0; v < in.size(); ++v) {
        if (in[v]) trial.w.push_back(v);
    }
    std::vector<EdgeId> gprime;
    for (std::size_t i : a.origin) {
        const auto& lens = a.lenses[i];
        if (!lens_empty_in(lens, in)) continue;
        ++trial.empty_lenses;
        gprime.push_back(lens.bounding.first);
    }
    trial.gprime_edges = gprime.size();
    for (std::size_t x = 0; x < gprime.size() && trial.lemma3_ok; ++x) {
        const auto& ex = d.edge(gprime[x]);
        for (std::size_t y = x + 1; y < gprime.size(); ++y) {
            const auto& ey = d.edge(gprime[y]);
            const bool independent = ex.u != ey.u && ex.u != ey.v && ex.v != ey.u && ex.v != ey.v;
            if (independent && a.report.count(gprime[x], gprime[y]) == 0) {
                trial.lemma3_ok = false;
                break;
            }
        }
    }
    trial.lemma2_ok = trial.gprime_edges <= 4 * trial.w.size();
    return trial;
}

} // namespace

ReplayTrace replay_theorem1(const Drawing& d, std::uint64_t seed, std::size_t trials) {
    const LensAnalysis a = analyse(d, std::nullopt);
    ReplayTrace tr;
    tr.n = d.vertex_count();
    tr.e = d.edge_count();
    tr.seed = seed;
    tr.lens_total = a.lenses.size();
    tr.t = a.t;
    tr.classes = a.class_sizes;
    tr.chosen_k = a.k;
    tr.heavy_vertex = a.heavy;
    tr.heavy_count = a.heavy_count;
    tr.origin_lens_count = a.origin.size();
    for (std::size_t i : a.origin) tr.origin_lenses.push_back(a.lenses[i].bounding);

    const Rational n = q(tr.n);
    const Rational e = q(tr.e);
    const Rational lens_total = q(tr.lens_total);
    auto& cps = tr.checkpoints;

    tr.branch = 2 * tr.lens_total < tr.e ? ReplayBranch::FewLenses : ReplayBranch::ManyLenses;
    if (tr.branch == ReplayBranch::FewLenses) {
        // One edge per parallel class leaves e - |L| edges of a simple graph.
        const Rational simple_edges = e - lens_total;
        cps.push_back(make_checkpoint("few.simple_edges_at_least_half", 2 * simple_edges, ">=", e));
        cps.push_back(make_checkpoint("few.simple_edges_at_most_pairs", simple_edges, "<=", n * (n - 1) / 2));
        cps.push_back(make_checkpoint("few.edges_below_n_squared", e, "<", n * n));
    }

    cps.push_back(make_checkpoint("classes.cover", q(tr.classes.size()), "<=", q(std::max<std::size_t>(tr.t, 1))));
    if (tr.lens_total > 0) {
        const unsigned k = *tr.chosen_k;
        const Rational class_k = q(tr.classes[k - 1]);
        const Rational half_scale = pow2(static_cast<long>(k) - 1);
        cps.push_back(make_checkpoint("pigeonhole", class_k * q(tr.t), ">=", lens_total));
        cps.push_back(make_checkpoint("heavy_vertex", q(tr.heavy_count) * n, ">=", class_k * half_scale));
        const Rational origin = q(tr.origin_lens_count);
        cps.push_back(make_checkpoint("origin.lower_bound", origin * n * q(tr.t), ">=", lens_total * half_scale));
        if (tr.branch == ReplayBranch::ManyLenses) {
            cps.push_back(make_checkpoint("origin.edge_form", origin, ">=",
                                          LogTerm::over_log2(e * pow2(static_cast<long>(k) - 2) / n, n), true));
        }

        // G^o: a vertex pair bounds at most one lens containing v.
        std::vector<std::pair<VertexId, VertexId>> pairs;
        for (std::size_t i : a.origin) pairs.emplace_back(a.lenses[i].a, a.lenses[i].b);
        std::sort(pairs.begin(), pairs.end());
        const auto repeats =
            static_cast<std::size_t>(pairs.end() - std::unique(pairs.begin(), pairs.end()));
        cps.push_back(make_checkpoint("origin.pairs_unique", q(repeats), "==", Rational(0)));

        for (std::size_t i = 0; i < trials; ++i) tr.trials.push_back(run_trial(d, a, k, seed, i));
        const auto lemma3_failures = static_cast<std::size_t>(
            std::count_if(tr.trials.begin(), tr.trials.end(), [](const ReplayTrial& x) { return !x.lemma3_ok; }));
        const auto lemma2_failures = static_cast<std::size_t>(
            std::count_if(tr.trials.begin(), tr.trials.end(), [](const ReplayTrial& x) { return !x.lemma2_ok; }));
        cps.push_back(make_checkpoint("lemma3.failed_trials", q(lemma3_failures), "==", Rational(0)));
        cps.push_back(make_checkpoint("lemma2.failed_trials", q(lemma2_failures), "==", Rational(0)));
        cps.push_back(make_checkpoint("final.origin_lenses", origin, "<=", 16 * pow2(static_cast<long>(k)) * n));
    }
    cps.push_back(make_checkpoint("theorem1.edge_cap", e, "<=", LogTerm::times_log2(64 * n * n, n)));
    return tr;
}

SamplingSummary sampling_statistics(const Drawing& d, std::uint64_t seed, std::size_t trials,
                                    std::optional<unsigned> k_override) {
    if (trials == 0) throw DomainError("sampling needs at least one trial");
    if (k_override && *k_override > 63) throw DomainError("class index must be at most 63");
    const LensAnalysis a = analyse(d, k_override);
    SamplingSummary s;
    s.k = a.k.value_or(1);
    s.p = pow2(-static_cast<long>(s.k));
    s.n = d.vertex_count();
    s.trials = trials;
    s.origin_lens_count = a.origin.size();

    double sum_w = 0.0;
    double sum_empty = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto in = sample_w(s.n, s.k, seed, i);
        sum_w += static_cast<double>(std::count(in.begin(), in.end(), true));
        for (std::size_t idx : a.origin) sum_empty += lens_empty_in(a.lenses[idx], in) ? 1.0 : 0.0;
    }
    const double p = to_double(s.p);
    s.mean_w = sum_w / static_cast<double>(trials);
    s.expected_w = p * static_cast<double>(s.n);
    s.standard_error = std::sqrt(static_cast<double>(s.n) * p * (1 - p) / static_cast<double>(trials));
    s.w_within_4se = std::abs(s.mean_w - s.expected_w) <= 4 * s.standard_error;
    s.mean_empty = sum_empty / static_cast<double>(trials);

    const Rational miss = 1 - s.p;
    s.expected_empty = 0;
    for (std::size_t idx : a.origin) s.expected_empty += s.p * s.p * pow(miss, a.lenses[idx].size());
    s.class_lower_bound = s.p * s.p * pow(miss, 1UL << std::min(s.k, 20U)) * q(s.origin_lens_count);
    s.expectation_meets_bound = s.expected_empty >= s.class_lower_bound;
    return s;
}

nlohmann::json checkpoints_to_json(const std::vector<Checkpoint>& cps) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& c : cps) {
        out.push_back({{"name", c.name},
                       {"relation", c.relation},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"lhs_approx", c.lhs_approx},
                       {"rhs_approx", c.rhs_approx},
                       {"pass", c.pass},
                       {"informational", c.informational}});
    }
    return out;
}

nlohmann::json replay_to_json(const ReplayTrace& t) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& x : t.trials) {
        trials.push_back({{"index", x.index},
                          {"w", x.w},
                          {"w_size", x.w.size()},
                          {"empty_lenses", x.empty_lenses},
                          {"gprime_edges", x.gprime_edges},
                          {"lemma3_ok", x.lemma3_ok},
                          {"lemma2_ok", x.lemma2_ok}});
    }
    nlohmann::json origin = nlohmann::json::array();
    for (const auto& p : t.origin_lenses) origin.push_back({p.first, p.second});
    auto opt = [](const auto& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
    return {{"n", t.n},
            {"e", t.e},
            {"seed", t.seed},
            {"branch", to_string(t.branch)},
            {"lens_total", t.lens_total},
            {"t", t.t},
            {"classes", t.classes},
            {"chosen_k", opt(t.chosen_k)},
            {"heavy_vertex", opt(t.heavy_vertex)},
            {"heavy_count", t.heavy_count},
            {"origin_lens_count", t.origin_lens_count},
            {"origin_lenses", origin},
            {"trials", trials},
            {"checkpoints", checkpoints_to_json(t.checkpoints)},
            {"ok", t.ok()}};
}

nlohmann::json sampling_to_json(const SamplingSummary& s) {
    return {{"k", s.k},
            {"p", to_string(s.p)},
            {"n", s.n},
            {"trials", s.trials},
            {"origin_lens_count", s.origin_lens_count},
            {"mean_w", s.mean_w},
            {"expected_w", s.expected_w},
            {"standard_error", s.standard_error},
            {"w_within_4se", s.w_within_4se},
            {"mean_empty", s.mean_empty},
            {"expected_empty", to_string(s.expected_empty)},
            {"class_lower_bound", to_string(s.class_lower_bound)},
            {"expectation_meets_bound", s.expectation_meets_bound}};
}

} // namespace lensgraph
