#include "lensgraph/bounds.hpp"

#include "lensgraph/errors.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lensgraph {

namespace {

using EdgeMask = std::uint32_t;

struct ClassSlot {
    std::size_t table;
    std::size_t local;
};

class BisectionSearch {
public:
    explicit BisectionSearch(const Drawing& d) : d_(d), report_(count_crossings(d)) {
        slot_.resize(d.edge_count());
        for (auto& cls : parallel_classes(d)) {
            if (cls.edges.size() < 2) continue;
            for (std::size_t i = 0; i < cls.edges.size(); ++i) slot_[cls.edges[i]] = ClassSlot{tables_.size(), i};
            tables_.emplace_back(d, std::move(cls), report_);
        }
        for (const auto& [pair, c] : report_.pair_counts) {
            if (c >= 2) doubles_.push_back(pair);
        }
    }

    BisectionResult run() {
        const std::size_t n = d_.vertex_count();
        const std::size_t cap = 4 * n / 5;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::uint32_t best_mask = 0;
        EdgeMask best_deleted = 0;

        for (std::uint32_t mask = 1; mask < (1U << n); mask += 2) {
            const auto s1 = static_cast<std::size_t>(std::popcount(mask));
            if (s1 > cap || n - s1 > cap) continue;
            side_ = mask;

            EdgeMask cut = 0;
            std::vector<EdgeId> candidates;
            for (EdgeId id = 0; id < d_.edge_count(); ++id) {
                const auto& e = d_.edge(id);
                if (in_part1(e.u) != in_part1(e.v)) cut |= EdgeMask{1} << id;
                else if (slot_[id] || involved_in_double(id)) candidates.push_back(id);
            }
            const auto cut_size = static_cast<std::size_t>(std::popcount(cut));
            if (cut_size >= best) continue;

            const std::size_t budget = std::min(best - 1 - cut_size, candidates.size());
            for (std::size_t k = 0; k <= budget; ++k) {
                if (auto repair = first_feasible(cut, candidates, k)) {
                    best = cut_size + k;
                    best_mask = mask;
                    best_deleted = cut | *repair;
                    break;
                }
            }
        }
        if (best == std::numeric_limits<std::size_t>::max()) {
            throw std::logic_error("no feasible bisection although deleting every edge is feasible");
        }

        BisectionResult r;
        r.width = best;
        for (VertexId v = 0; v < n; ++v) ((best_mask >> v) & 1U ? r.part1 : r.part2).push_back(v);
        for (EdgeId id = 0; id < d_.edge_count(); ++id) {
            if ((best_deleted >> id) & 1U) r.deleted_edges.push_back(id);
        }
        return r;
    }

private:
    bool in_part1(VertexId v) const { return (side_ >> v) & 1U; }

    bool involved_in_double(EdgeId id) const {
        for (const auto& p : doubles_) {
            if (p.first == id || p.second == id) return true;
        }
        return false;
    }

    // First k-subset of `candidates` (in combination order) whose deletion,
    // on top of `cut`, leaves both parts separated and single-crossing.
    std::optional<EdgeMask> first_feasible(EdgeMask cut, const std::vector<EdgeId>& candidates, std::size_t k) const {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            EdgeMask repair = 0;
            for (auto i : pick) repair |= EdgeMask{1} << candidates[i];
            if (feasible(cut | repair)) return repair;
            // Next combination.
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
            if (i == 0) return std::nullopt;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    bool feasible(EdgeMask deleted) const {
        for (const auto& p : doubles_) {
            if (!((deleted >> p.first) & 1U) && !((deleted >> p.second) & 1U)) return false;
        }
        for (const auto& table : tables_) {
            const auto& cls = table.parallel_class();
            std::uint64_t remaining = 0;
            for (std::size_t i = 0; i < cls.edges.size(); ++i) {
                if (!((deleted >> cls.edges[i]) & 1U)) remaining |= std::uint64_t{1} << i;
            }
            if (remaining == 0) continue;
            const bool part = in_part1(cls.a);
            if (!table.separated_with(remaining, [&](VertexId v) { return in_part1(v) == part; })) return false;
        }
        return true;
    }

    const Drawing& d_;
    CrossingReport report_;
    std::vector<ClassLensTable> tables_;
    std::vector<std::optional<ClassSlot>> slot_;
    std::vector<EdgePair> doubles_;
    std::uint32_t side_ = 0;
};

} // namespace

BisectionResult bisection_width_exact(const Drawing& d) {
    const std::size_t n = d.vertex_count();
    if (n > kBisectionMaxVertices || d.edge_count() > kBisectionMaxEdges) {
        throw TooLarge("exhaustive bisection supports n <= " + std::to_string(kBisectionMaxVertices) +
                       " and e <= " + std::to_string(kBisectionMaxEdges) + " (got n = " + std::to_string(n) +
                       ", e = " + std::to_string(d.edge_count()) + ")");
    }
    if (n < 2) throw TooSmall("bisection needs at least two vertices");
    auto r = BisectionSearch(d).run();
    r.parts_valid = verify_bisection(d, r);
    return r;
}

bool verify_bisection(const Drawing& d, const BisectionResult& r) {
    const std::size_t n = d.vertex_count();
    if (r.part1.size() + r.part2.size() != n) return false;
    if (5 * r.part1.size() > 4 * n || 5 * r.part2.size() > 4 * n) return false;
    if (r.width != r.deleted_edges.size()) return false;

    std::vector<int> side(n, -1);
    for (VertexId v : r.part1) side.at(v) = 1;
    for (VertexId v : r.part2) {
        if (side.at(v) != -1) return false;
        side[v] = 2;
    }
    std::vector<bool> deleted(d.edge_count(), false);
    for (EdgeId id : r.deleted_edges) deleted.at(id) = true;

    std::vector<EdgeId> keep1, keep2;
    for (EdgeId id = 0; id < d.edge_count(); ++id) {
        if (deleted[id]) continue;
        const auto& e = d.edge(id);
        if (side[e.u] != side[e.v]) return false;
        (side[e.u] == 1 ? keep1 : keep2).push_back(id);
    }
    for (const auto& [part, keep] : {std::pair{&r.part1, &keep1}, std::pair{&r.part2, &keep2}}) {
        const Drawing sub = subdrawing(d, *part, *keep);
        const auto v = separated_verdict(sub);
        if (!v.separated || !v.single_crossing) return false;
    }
    return true;
}

Lemma4Check check_lemma4(const Drawing& d) {
    const auto report = count_crossings(d);
    const auto verdict = separated_verdict(d, report);
    if (!verdict.separated) throw NotSeparated("drawing is not separated");
    if (!verdict.single_crossing) throw NotSingleCrossing("drawing is not single-crossing");

    const auto b = bisection_width_exact(d);
    Integer radicand = Integer(static_cast<unsigned long>(report.total)) + static_cast<unsigned long>(d.vertex_count());
    for (auto deg : degree_sequence(d)) radicand += Integer(static_cast<unsigned long>(deg * deg));

    Lemma4Check c;
    c.lhs = b.width;
    c.radicand = radicand;
    c.rhs = 22.0 * std::sqrt(radicand.get_d());
    c.holds = compare_scaled_sqrt_sum(Rational(static_cast<unsigned long>(b.width)), Rational(22), Rational(radicand),
                                      Rational(0)) <= 0;
    return c;
}

} // namespace lensgraph
