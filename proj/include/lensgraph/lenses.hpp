#pragma once

#include "lensgraph/crossings.hpp"
#include "lensgraph/drawing.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace lensgraph {

/// All edges joining one unordered vertex pair (a < b).
struct ParallelClass {
    VertexId a = 0;
    VertexId b = 0;
    std::vector<EdgeId> edges;
};

/// Partition of the edges by endpoint pair, ordered by (a, b).
std::vector<ParallelClass> parallel_classes(const Drawing& d);

/// A bounded piece cut out by two adjacent parallel edges. `region` is the
/// Jordan polygon: the arc of `first` from class vertex a to b followed by
/// the reversed arc of `second`.
struct LensRecord {
    EdgePair bounding;
    VertexId a = 0;
    VertexId b = 0;
    std::vector<Point> region;
    std::vector<VertexId> interior_vertices;

    std::size_t size() const { return interior_vertices.size(); }
};

/// Pairwise lens geometry of a single parallel class.
///
/// Arcs of the class are addressed by local index (position in
/// `cls.edges`). For every noncrossing pair the table stores which other
/// arcs intrude into their Jordan polygon and which vertices lie inside it,
/// so the lens structure of any subset of the class can be recomputed
/// without further geometry.
class ClassLensTable {
public:
    /// Geometry for every pair; crossing pairs are recorded, not rejected.
    ClassLensTable(const Drawing& d, ParallelClass cls, const CrossingReport& report);

    const ParallelClass& parallel_class() const { return cls_; }
    std::size_t size() const { return cls_.edges.size(); }

    bool crosses(std::size_t i, std::size_t j) const { return cross_[i][j]; }
    bool intrudes(std::size_t i, std::size_t j, std::size_t k) const;
    const std::vector<VertexId>& interior(std::size_t i, std::size_t j) const;
    const std::vector<Point>& region(std::size_t i, std::size_t j) const;

    /// Lens pairs (i < j) of the sub-class selected by `mask`. Requires the
    /// selection to be pairwise noncrossing.
    std::vector<std::pair<std::size_t, std::size_t>> lens_pairs(std::uint64_t mask) const;

    /// True iff the selection is pairwise noncrossing and every lens holds a
    /// vertex for which `present` is true.
    bool separated_with(std::uint64_t mask, const std::function<bool(VertexId)>& present) const;

    std::uint64_t full_mask() const;

private:
    std::size_t slot(std::size_t i, std::size_t j) const { return i * cls_.edges.size() + j; }

    ParallelClass cls_;
    std::vector<std::vector<bool>> cross_;
    std::vector<std::vector<Point>> regions_;         // by slot(i, j), i < j
    std::vector<std::vector<VertexId>> interiors_;    // by slot(i, j)
    std::vector<std::vector<bool>> intrusion_;        // by slot(i, j), indexed by k
};

/// Lenses of one class. Throws CrossingParallelPair if two of its arcs cross.
std::vector<LensRecord> class_lenses(const Drawing& d, const ParallelClass& cls, const CrossingReport& report);

/// The lens set L of a valid drawing, class by class: j - 1 records for a
/// class of size j. Throws CrossingParallelPair.
std::vector<LensRecord> lenses(const Drawing& d);
std::vector<LensRecord> lenses(const Drawing& d, const CrossingReport& report);

enum class SeparationViolationKind { CrossingParallelPair, EmptyLens, DoubleCrossingPair };

const char* to_string(SeparationViolationKind kind);

struct SeparationViolation {
    SeparationViolationKind kind;
    std::vector<EdgeId> edges;
};

struct SeparatedVerdict {
    bool separated = true;
    bool single_crossing = true;
    std::vector<SeparationViolation> violations;
};

SeparatedVerdict separated_verdict(const Drawing& d);
SeparatedVerdict separated_verdict(const Drawing& d, const CrossingReport& report);

nlohmann::json lenses_to_json(const std::vector<LensRecord>& lenses);
nlohmann::json verdict_to_json(const SeparatedVerdict& v);

} // namespace lensgraph
