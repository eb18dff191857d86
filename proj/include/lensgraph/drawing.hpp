#pragma once

#include "lensgraph/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lensgraph {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// An edge drawn as a polyline. The arc runs from the point of `u` to the
/// point of `v`; parallel edges are allowed, loops are not.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    std::vector<Point> arc;

    friend bool operator==(const Edge&, const Edge&) = default;
};

enum class ViolationKind {
    PassesThroughVertex, // arc meets a vertex point other than its own ends
    ImproperTouch,       // an endpoint of one segment inside another arc's segment
    Overlap,             // two arcs share a piece of positive length
    BreakpointIncidence, // two arcs meet at a polyline breakpoint
    ConcurrentCrossing,  // three or more arcs cross at one point
    SelfIntersection,    // an arc is not simple
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<EdgeId> edges;
    std::optional<Point> witness;
    std::optional<VertexId> vertex;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// Immutable multigraph drawing. The constructor enforces structural
/// invariants (SchemaError); general position is checked by validate().
class Drawing {
public:
    Drawing();
    Drawing(std::vector<Point> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t segment_count() const;

    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Point& vertex(VertexId id) const { return vertices_.at(id); }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    /// validate(*this), computed once and shared by copies.
    const ValidationReport& validation() const;

    /// Throws InvalidDrawing unless validation().ok.
    void require_valid() const;

    friend bool operator==(const Drawing& a, const Drawing& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    struct Cache;

    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::shared_ptr<Cache> cache_;
};

/// General-position check; violations are data, never exceptions.
ValidationReport validate(const Drawing& d);

/// Violations introduced by appending `candidate` to an already valid
/// drawing. Empty iff the extended drawing is valid.
std::vector<Violation> validate_extension(const Drawing& base, const Edge& candidate);

std::vector<std::size_t> degree_sequence(const Drawing& d);

/// Maps from a subdrawing's ids back to its parent's.
struct SubdrawingMap {
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};

/// Induced drawing on `vertices` keeping `edges` (each must join two kept
/// vertices). Ids are renumbered in the given order.
Drawing subdrawing(const Drawing& d, std::span<const VertexId> vertices, std::span<const EdgeId> edges,
                   SubdrawingMap* map = nullptr);

/// Same drawing with additional isolated vertices.
Drawing with_vertices(const Drawing& d, std::span<const Point> extra);

/// Drawing with the given vertex and its incident edges removed.
Drawing without_vertex(const Drawing& d, VertexId removed);

} // namespace lensgraph
