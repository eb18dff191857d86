#include "lensgraph/bounds.hpp"
#include "lensgraph/errors.hpp"
#include "lensgraph/lenses.hpp"
#include "lensgraph/replay.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace lensgraph {

namespace {

Rational q(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

/// sign(b - 40 (sqrt(k e) + sqrt(v))) for a threshold that may be irrational.
int compare_split_bound(std::size_t b, const LogTerm& k, std::size_t e, std::size_t v) {
    const Rational lhs = q(b);
    if (auto exact = k.exact()) return compare_scaled_sqrt_sum(lhs, 40, *exact * q(e), q(v));
    // k = coef / log2(arg) with coef > 0 and arg > 1
    for (unsigned long bits = 64; bits <= 1UL << 14; bits *= 2) {
        const auto log = log2_enclosure(k.argument(), bits);
        if (log.lo <= 0) continue;
        const Rational k_lo = k.coefficient() / log.hi;
        const Rational k_hi = k.coefficient() / log.lo;
        if (compare_scaled_sqrt_sum(lhs, 40, k_lo * q(e), q(v)) <= 0) return -1;
        if (compare_scaled_sqrt_sum(lhs, 40, k_hi * q(e), q(v)) > 0) return 1;
    }
    throw std::runtime_error("could not decide the split bound");
}

std::string split_bound_text(const LogTerm& k, std::size_t e, std::size_t v) {
    return "40*(sqrt((" + k.to_string() + ")*" + std::to_string(e) + ")+sqrt(" + std::to_string(v) + "))";
}

Checkpoint boolean_checkpoint(std::string name, bool ok) {
    return make_checkpoint(std::move(name), Rational(ok ? 1 : 0), "==", Rational(1));
}

} // namespace

DecompositionTrace decompose(const Drawing& d, const std::optional<Rational>& k_override,
                             const DecomposeOptions& options) {
    d.require_valid();
    const std::size_t n = d.vertex_count();
    const std::size_t e = d.edge_count();
    if (n < 2) throw TooSmall("decomposition needs n >= 2");
    const auto report = count_crossings(d);
    const auto verdict = separated_verdict(d, report);
    if (!verdict.separated) throw NotSeparated("drawing is not separated");
    if (!verdict.single_crossing) throw NotSingleCrossing("drawing is not single-crossing");

    DecompositionTrace tr;
    tr.n = n;
    tr.e = e;
    tr.delta = (2 * e + n - 1) / n;
    const auto degrees = degree_sequence(d);
    const std::size_t max_degree = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    if (max_degree > tr.delta) {
        if (options.require_degree_cap) {
            throw DegreeTooHigh("maximum degree " + std::to_string(max_degree) + " exceeds ceil(2e/n) = " +
                                std::to_string(tr.delta));
        }
        tr.notes.push_back("degree cap not enforced: maximum degree " + std::to_string(max_degree) +
                           " exceeds " + std::to_string(tr.delta));
    }

    if (k_override) {
        if (*k_override < 0) throw DomainError("threshold override must be nonnegative");
        tr.k_threshold = LogTerm(*k_override);
        tr.k_overridden = true;
    } else if (e > n) {
        const Rational ee = q(e);
        const Rational nn = q(n);
        tr.k_threshold = LogTerm::over_log2(ee * ee / (nn * nn) / pow(Rational(10), 10), ee / nn);
    } else {
        tr.k_threshold = LogTerm(0);
        tr.notes.push_back("threshold undefined for e <= n; using k = 0");
    }
    const LogTerm& k = tr.k_threshold;

    // Stop rule: the largest i with (5/4)^i 10^6 k <= e, when k > 0.
    if (k.compare(0) > 0 && k.scaled(pow(Rational(10), 6)).compare(q(e)) <= 0) {
        std::size_t i0 = 0;
        Rational growth = pow(Rational(10), 6) * Rational(5, 4);
        constexpr std::size_t kStopRuleCap = 4096;
        while (i0 < kStopRuleCap && k.scaled(growth).compare(q(e)) <= 0) {
            ++i0;
            growth *= Rational(5, 4);
        }
        tr.stop_rule_step = i0;
    }

    auto heavy = [&](std::size_t c, std::size_t edges) { return k.scaled(q(edges)).compare(q(c)) <= 0; };

    std::vector<DecompositionMember> family(1);
    for (VertexId v = 0; v < n; ++v) family[0].vertices.push_back(v);
    for (EdgeId id = 0; id < e; ++id) family[0].edges.push_back(id);
    family[0].c = report.total;

    Rational level = q(n); // (4/5)^i n
    for (std::size_t i = 0;; ++i) {
        const std::string tag = "F" + std::to_string(i);
        std::set<VertexId> seen;
        std::size_t shared = 0;
        bool kept_ok = true;
        for (const auto& m : family) {
            for (VertexId v : m.vertices) shared += seen.insert(v).second ? 0 : 1;
            kept_ok = kept_ok && (heavy(m.c, m.edges.size()) || q(m.vertices.size()) <= level);
        }
        tr.checkpoints.push_back(make_checkpoint(tag + ".vertex_disjoint", q(shared), "==", Rational(0)));
        tr.checkpoints.push_back(boolean_checkpoint(tag + ".invariant", kept_ok));

        if (tr.stop_rule_step && i == *tr.stop_rule_step) {
            tr.stop_step = i;
            tr.stop_reason = "stop rule";
            tr.families.push_back({i, family});
            break;
        }

        const Rational next_level = level * Rational(4, 5);
        std::vector<DecompositionMember> next;
        bool any_split = false;
        for (std::size_t mi = 0; mi < family.size(); ++mi) {
            auto& m = family[mi];
            if (heavy(m.c, m.edges.size()) || q(m.vertices.size()) <= next_level) {
                next.push_back({m.vertices, m.edges, m.c, false, std::nullopt});
                continue;
            }
            any_split = true;
            const std::string name = tag + "[" + std::to_string(mi) + "]";
            SubdrawingMap map;
            const Drawing sub = subdrawing(d, m.vertices, m.edges, &map);
            const BisectionResult b = bisection_width_exact(sub);
            m.split = true;
            m.width = b.width;
            tr.edges_deleted_total += b.width;

            tr.checkpoints.push_back(boolean_checkpoint(name + ".split_conditions", verify_bisection(sub, b)));
            Checkpoint bound;
            bound.name = name + ".width_bound";
            bound.relation = "<=";
            bound.lhs = std::to_string(b.width);
            bound.rhs = split_bound_text(k, m.edges.size(), m.vertices.size());
            bound.lhs_approx = static_cast<double>(b.width);
            bound.rhs_approx = 40 * (std::sqrt(std::max(0.0, k.approx()) * static_cast<double>(m.edges.size())) +
                                     std::sqrt(static_cast<double>(m.vertices.size())));
            bound.pass = compare_split_bound(b.width, k, m.edges.size(), m.vertices.size()) <= 0;
            tr.checkpoints.push_back(bound);

            Integer radicand = static_cast<unsigned long>(m.c + sub.vertex_count());
            for (std::size_t deg : degree_sequence(sub)) radicand += Integer(static_cast<unsigned long>(deg * deg));
            Checkpoint lemma4;
            lemma4.name = name + ".lemma4";
            lemma4.relation = "<=";
            lemma4.lhs = std::to_string(b.width);
            lemma4.rhs = "22*sqrt(" + radicand.get_str() + ")";
            lemma4.lhs_approx = static_cast<double>(b.width);
            lemma4.rhs_approx = 22 * std::sqrt(radicand.get_d());
            lemma4.pass = compare_scaled_sqrt_sum(q(b.width), 22, Rational(radicand), 0) <= 0;
            tr.checkpoints.push_back(lemma4);

            std::set<EdgeId> deleted;
            for (EdgeId id : b.deleted_edges) deleted.insert(map.edge_origin[id]);
            for (const auto* part : {&b.part1, &b.part2}) {
                DecompositionMember child;
                std::set<VertexId> inside;
                for (VertexId v : *part) {
                    child.vertices.push_back(map.vertex_origin[v]);
                    inside.insert(map.vertex_origin[v]);
                }
                std::sort(child.vertices.begin(), child.vertices.end());
                for (EdgeId id : m.edges) {
                    const auto& edge = d.edge(id);
                    if (!deleted.count(id) && inside.count(edge.u) && inside.count(edge.v)) child.edges.push_back(id);
                }
                child.c = crossings_within(report, child.edges);
                next.push_back(std::move(child));
            }
        }
        tr.families.push_back({i, family});
        if (!any_split) {
            tr.stop_step = i;
            tr.stop_reason = "no splittable member";
            break;
        }
        family = std::move(next);
        level = next_level;
    }

    for (const auto& m : tr.families.back().members) {
        if (heavy(m.c, m.edges.size())) tr.final_heavy_edges += m.edges.size();
    }
    return tr;
}

nlohmann::json decomposition_to_json(const DecompositionTrace& t) {
    nlohmann::json families = nlohmann::json::array();
    for (const auto& step : t.families) {
        nlohmann::json members = nlohmann::json::array();
        for (const auto& m : step.members) {
            members.push_back({{"vertices", m.vertices},
                               {"edges", m.edges},
                               {"v", m.vertices.size()},
                               {"e", m.edges.size()},
                               {"c", m.c},
                               {"action", m.split ? "split" : "kept"},
                               {"width", m.width ? nlohmann::json(*m.width) : nlohmann::json(nullptr)}});
        }
        families.push_back({{"step", step.index}, {"members", members}});
    }
    return {{"n", t.n},
            {"e", t.e},
            {"delta", t.delta},
            {"k_threshold", {{"exact", t.k_threshold.to_string()}, {"approx", t.k_threshold.approx()}}},
            {"k_overridden", t.k_overridden},
            {"stop_rule_step", t.stop_rule_step ? nlohmann::json(*t.stop_rule_step) : nlohmann::json(nullptr)},
            {"stop_step", t.stop_step},
            {"stop_reason", t.stop_reason},
            {"families", families},
            {"edges_deleted_total", t.edges_deleted_total},
            {"final_heavy_edges", t.final_heavy_edges},
            {"notes", t.notes},
            {"checkpoints", checkpoints_to_json(t.checkpoints)},
            {"ok", t.ok()}};
}

} // namespace lensgraph
