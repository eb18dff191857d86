#include "lensgraph/bounds.hpp"

#include "lensgraph/errors.hpp"

#include <algorithm>

namespace lensgraph {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

BoundValues evaluate_bounds(std::size_t n, std::size_t e, std::size_t m, const Rational& c_param) {
    if (n < 2) throw DomainError("bounds need n >= 2, got n = " + std::to_string(n));
    if (m < 1) throw DomainError("multiplicity bound m must be at least 1");
    const Rational nn(static_cast<unsigned long>(n));
    const Rational ee(static_cast<unsigned long>(e));
    const Rational mm(static_cast<unsigned long>(m));

    BoundValues v;
    v.n = n;
    v.e = e;
    v.m = m;
    v.c_param = c_param;
    const Rational cube_ratio = ee * ee * ee / (nn * nn);
    if (e >= 4 * n) {
        v.classic = c_param * cube_ratio;
        v.multigraph = c_param * cube_ratio / mm;
        v.corollary = LogTerm::over_log2(Rational(1) / pow(Rational(10), 25) * cube_ratio, ee / nn);
    }
    v.euler_lower = ee - 3 * nn;
    v.edge_cap = LogTerm::times_log2(64 * nn * nn, nn);
    return v;
}

bool BoundReport::theorems_hold() const {
    return edge_cap != Verdict::Fails && euler != Verdict::Fails && corollary != Verdict::Fails;
}

namespace {

Verdict verdict(bool applicable, bool holds) {
    if (!applicable) return Verdict::NotApplicable;
    return holds ? Verdict::Holds : Verdict::Fails;
}

} // namespace

BoundReport check_drawing_bounds(const Drawing& d, const Rational& c_param) {
    const auto report = count_crossings(d);
    const auto sep = separated_verdict(d, report);
    std::size_t m = 1;
    for (const auto& cls : parallel_classes(d)) m = std::max(m, cls.edges.size());

    BoundReport r;
    r.values = evaluate_bounds(d.vertex_count(), d.edge_count(), m, c_param);
    r.cr_actual = report.total;
    r.separated = sep.separated;
    r.single_crossing = sep.single_crossing;

    const Rational cr(static_cast<unsigned long>(report.total));
    const Rational e(static_cast<unsigned long>(d.edge_count()));
    const bool proven_class = sep.separated && sep.single_crossing;
    const auto& v = r.values;
    r.classic = verdict(v.classic.has_value() && m == 1, v.classic && cr >= *v.classic);
    r.multigraph = verdict(v.multigraph.has_value(), v.multigraph && cr >= *v.multigraph);
    r.edge_cap = verdict(proven_class, e <= v.edge_cap);
    r.euler = verdict(proven_class, cr >= v.euler_lower);
    r.corollary = verdict(proven_class && v.corollary.has_value(), v.corollary && cr >= *v.corollary);
    return r;
}

ThrackleCheck thrackle_check(const Drawing& d) {
    const auto report = count_crossings(d);
    bool premise = is_single_crossing(report);
    for (const auto& cls : parallel_classes(d)) {
        if (cls.edges.size() > 1) premise = false;
    }
    for (EdgeId a = 0; premise && a < d.edge_count(); ++a) {
        for (EdgeId b = a + 1; b < d.edge_count(); ++b) {
            const auto& e = d.edge(a);
            const auto& f = d.edge(b);
            const bool independent = e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v;
            if (independent && report.count(a, b) != 1) {
                premise = false;
                break;
            }
        }
    }
    return {premise, d.edge_count() <= 4 * d.vertex_count()};
}

nlohmann::json bounds_to_json(const BoundReport& r) {
    const auto& v = r.values;
    auto opt_rational = [](const std::optional<Rational>& x) -> nlohmann::json {
        if (!x) return nullptr;
        return to_string(*x);
    };
    auto log_term = [](const LogTerm& t) -> nlohmann::json { return {{"exact", t.to_string()}, {"approx", t.approx()}}; };
    nlohmann::json values = {
        {"c_param", to_string(v.c_param)},
        {"classic", opt_rational(v.classic)},
        {"multigraph", opt_rational(v.multigraph)},
        {"corollary", v.corollary ? log_term(*v.corollary) : nlohmann::json(nullptr)},
        {"euler_lower", to_string(v.euler_lower)},
        {"edge_cap", log_term(v.edge_cap)},
    };
    return {{"n", v.n},
            {"e", v.e},
            {"m", v.m},
            {"cr_actual", r.cr_actual},
            {"separated", r.separated},
            {"single_crossing", r.single_crossing},
            {"values", values},
            {"verdicts",
             {{"classic", to_string(r.classic)},
              {"multigraph", to_string(r.multigraph)},
              {"edge_cap", to_string(r.edge_cap)},
              {"euler", to_string(r.euler)},
              {"corollary", to_string(r.corollary)}}}};
}

nlohmann::json bisection_to_json(const BisectionResult& r) {
    return {{"width", r.width},
            {"part1", r.part1},
            {"part2", r.part2},
            {"deleted_edges", r.deleted_edges},
            {"parts_valid", r.parts_valid}};
}

nlohmann::json lemma4_to_json(const Lemma4Check& c) {
    return {{"lhs", c.lhs}, {"radicand", c.radicand.get_str()}, {"rhs", c.rhs}, {"holds", c.holds}};
}

} // namespace lensgraph
