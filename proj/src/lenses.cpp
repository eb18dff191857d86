#include "lensgraph/lenses.hpp"

#include "lensgraph/drawing_io.hpp"
#include "lensgraph/errors.hpp"

#include <map>
#include <stdexcept>

namespace lensgraph {

const char* to_string(SeparationViolationKind kind) {
    switch (kind) {
    case SeparationViolationKind::CrossingParallelPair: return "CrossingParallelPair";
    case SeparationViolationKind::EmptyLens: return "EmptyLens";
    case SeparationViolationKind::DoubleCrossingPair: return "DoubleCrossingPair";
    }
    return "?";
}

std::vector<ParallelClass> parallel_classes(const Drawing& d) {
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> groups;
    for (EdgeId id = 0; id < d.edge_count(); ++id) {
        const auto& e = d.edge(id);
        groups[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(id);
    }
    std::vector<ParallelClass> out;
    out.reserve(groups.size());
    for (auto& [key, ids] : groups) out.push_back({key.first, key.second, std::move(ids)});
    return out;
}

namespace {

// Arc of `id` oriented from vertex `a`.
std::vector<Point> oriented_arc(const Drawing& d, EdgeId id, VertexId a) {
    const Edge& e = d.edge(id);
    if (e.u == a) return e.arc;
    return {e.arc.rbegin(), e.arc.rend()};
}

// A point of the arc strictly between its ends.
Point interior_sample(const std::vector<Point>& arc) {
    if (arc.size() >= 3) return arc[1];
    return {(arc[0].x + arc[1].x) / 2, (arc[0].y + arc[1].y) / 2};
}

} // namespace

ClassLensTable::ClassLensTable(const Drawing& d, ParallelClass cls, const CrossingReport& report)
    : cls_(std::move(cls)) {
    const std::size_t j = cls_.edges.size();
    if (j > 64) throw TooLarge("parallel class with more than 64 edges");
    cross_.assign(j, std::vector<bool>(j, false));
    regions_.resize(j * j);
    interiors_.resize(j * j);
    intrusion_.resize(j * j);

    std::vector<std::vector<Point>> arcs;
    std::vector<Point> samples;
    for (EdgeId id : cls_.edges) {
        arcs.push_back(oriented_arc(d, id, cls_.a));
        samples.push_back(interior_sample(arcs.back()));
    }
    for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t k = i + 1; k < j; ++k) {
            cross_[i][k] = cross_[k][i] = report.count(cls_.edges[i], cls_.edges[k]) > 0;
        }
    }

    for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t k = i + 1; k < j; ++k) {
            if (cross_[i][k]) continue;
            auto& poly = regions_[slot(i, k)];
            poly = arcs[i];
            const auto& back = arcs[k];
            for (std::size_t t = back.size() - 2; t >= 1; --t) poly.push_back(back[t]);

            auto& intr = intrusion_[slot(i, k)];
            intr.assign(j, false);
            for (std::size_t c = 0; c < j; ++c) {
                if (c == i || c == k || cross_[i][c] || cross_[k][c]) continue;
                const auto loc = point_in_polygon(samples[c], poly);
                if (loc == Location::OnBoundary) throw InvalidDrawing("parallel arcs touch away from their ends");
                intr[c] = loc == Location::Inside;
            }
            auto& inside = interiors_[slot(i, k)];
            for (VertexId v = 0; v < d.vertex_count(); ++v) {
                if (v == cls_.a || v == cls_.b) continue;
                const auto loc = point_in_polygon(d.vertex(v), poly);
                if (loc == Location::OnBoundary) throw InvalidDrawing("vertex on a lens boundary");
                if (loc == Location::Inside) inside.push_back(v);
            }
        }
    }
}

bool ClassLensTable::intrudes(std::size_t i, std::size_t j, std::size_t k) const {
    if (i > j) std::swap(i, j);
    return intrusion_[slot(i, j)][k];
}

const std::vector<VertexId>& ClassLensTable::interior(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return interiors_[slot(i, j)];
}

const std::vector<Point>& ClassLensTable::region(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return regions_[slot(i, j)];
}

std::uint64_t ClassLensTable::full_mask() const {
    const auto j = cls_.edges.size();
    return j == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << j) - 1;
}

std::vector<std::pair<std::size_t, std::size_t>> ClassLensTable::lens_pairs(std::uint64_t mask) const {
    const std::size_t j = cls_.edges.size();
    auto in = [mask](std::size_t i) { return (mask >> i) & 1U; };
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < j; ++i) {
        if (!in(i)) continue;
        for (std::size_t k = i + 1; k < j; ++k) {
            if (!in(k)) continue;
            if (cross_[i][k]) throw CrossingParallelPair("parallel edges cross");
            bool adjacent = true;
            for (std::size_t c = 0; c < j && adjacent; ++c) {
                if (in(c) && c != i && c != k && intrusion_[slot(i, k)][c]) adjacent = false;
            }
            if (adjacent) out.emplace_back(i, k);
        }
    }
    std::size_t selected = 0;
    for (std::size_t i = 0; i < j; ++i) selected += in(i);
    if (selected > 0 && out.size() != selected - 1) {
        throw std::logic_error("lens enumeration found " + std::to_string(out.size()) + " lenses for " +
                               std::to_string(selected) + " noncrossing parallel arcs");
    }
    return out;
}

bool ClassLensTable::separated_with(std::uint64_t mask, const std::function<bool(VertexId)>& present) const {
    const std::size_t j = cls_.edges.size();
    for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t k = i + 1; k < j; ++k) {
            if (((mask >> i) & 1U) && ((mask >> k) & 1U) && cross_[i][k]) return false;
        }
    }
    for (const auto& [i, k] : lens_pairs(mask)) {
        bool any = false;
        for (VertexId v : interior(i, k)) {
            if (present(v)) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    }
    return true;
}

std::vector<LensRecord> class_lenses(const Drawing& d, const ParallelClass& cls, const CrossingReport& report) {
    std::vector<LensRecord> out;
    if (cls.edges.size() < 2) return out;
    for (std::size_t i = 0; i < cls.edges.size(); ++i) {
        for (std::size_t k = i + 1; k < cls.edges.size(); ++k) {
            if (report.count(cls.edges[i], cls.edges[k]) > 0) {
                throw CrossingParallelPair("parallel edges " + std::to_string(cls.edges[i]) + " and " +
                                           std::to_string(cls.edges[k]) + " cross");
            }
        }
    }
    const ClassLensTable table(d, cls, report);
    for (const auto& [i, k] : table.lens_pairs(table.full_mask())) {
        out.push_back({EdgePair::of(cls.edges[i], cls.edges[k]), cls.a, cls.b, table.region(i, k), table.interior(i, k)});
    }
    return out;
}

std::vector<LensRecord> lenses(const Drawing& d) { return lenses(d, count_crossings(d)); }

std::vector<LensRecord> lenses(const Drawing& d, const CrossingReport& report) {
    std::vector<LensRecord> out;
    for (const auto& cls : parallel_classes(d)) {
        auto part = class_lenses(d, cls, report);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

SeparatedVerdict separated_verdict(const Drawing& d) { return separated_verdict(d, count_crossings(d)); }

SeparatedVerdict separated_verdict(const Drawing& d, const CrossingReport& report) {
    SeparatedVerdict verdict;
    verdict.single_crossing = is_single_crossing(report);
    for (const auto& [pair, c] : report.pair_counts) {
        if (c >= 2) {
            verdict.violations.push_back({SeparationViolationKind::DoubleCrossingPair, {pair.first, pair.second}});
        }
    }
    for (const auto& cls : parallel_classes(d)) {
        if (cls.edges.size() < 2) continue;
        bool crossing = false;
        for (std::size_t i = 0; i < cls.edges.size(); ++i) {
            for (std::size_t k = i + 1; k < cls.edges.size(); ++k) {
                if (report.count(cls.edges[i], cls.edges[k]) > 0) {
                    crossing = true;
                    verdict.violations.push_back(
                        {SeparationViolationKind::CrossingParallelPair, {cls.edges[i], cls.edges[k]}});
                }
            }
        }
        if (crossing) continue;
        for (const auto& lens : class_lenses(d, cls, report)) {
            if (lens.size() == 0) {
                verdict.violations.push_back(
                    {SeparationViolationKind::EmptyLens, {lens.bounding.first, lens.bounding.second}});
            }
        }
    }
    verdict.separated = true;
    for (const auto& v : verdict.violations) {
        if (v.kind != SeparationViolationKind::DoubleCrossingPair) verdict.separated = false;
    }
    return verdict;
}

nlohmann::json lenses_to_json(const std::vector<LensRecord>& lenses) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& l : lenses) {
        out.push_back({{"bounding_edges", {l.bounding.first, l.bounding.second}},
                       {"endpoints", {l.a, l.b}},
                       {"size", l.size()},
                       {"interior_vertices", l.interior_vertices},
                       {"region", polyline_to_json(l.region)}});
    }
    return out;
}

nlohmann::json verdict_to_json(const SeparatedVerdict& v) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& x : v.violations) violations.push_back({{"kind", to_string(x.kind)}, {"edges", x.edges}});
    return {{"separated", v.separated}, {"single_crossing", v.single_crossing}, {"violations", violations}};
}

} // namespace lensgraph
