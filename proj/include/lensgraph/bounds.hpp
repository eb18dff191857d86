#pragma once

#include "lensgraph/crossings.hpp"
#include "lensgraph/drawing.hpp"
#include "lensgraph/exact_real.hpp"
#include "lensgraph/lenses.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lensgraph {

/// Default constant for the classical and multigraph crossing lemmas.
inline const Rational kDefaultCrossingConstant{1, 64};

/// Closed-form bounds for given n, e, m. Logarithms are base 2.
///   classic     c e^3 / n^2                 (e >= 4n)
///   multigraph  c e^3 / (m n^2)             (e >= 4n)
///   corollary   1e-25 e^3 / (n^2 log2(e/n)) (e >= 4n)
///   euler       e - 3n
///   edge cap    64 n^2 log2 n
struct BoundValues {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t m = 1;
    Rational c_param;
    std::optional<Rational> classic;
    std::optional<Rational> multigraph;
    std::optional<LogTerm> corollary;
    Rational euler_lower;
    LogTerm edge_cap;
};

/// Throws DomainError if n < 2 or m < 1.
BoundValues evaluate_bounds(std::size_t n, std::size_t e, std::size_t m, const Rational& c_param);

enum class Verdict { Holds, Fails, NotApplicable };

const char* to_string(Verdict v);

struct BoundReport {
    BoundValues values;
    std::size_t cr_actual = 0;
    bool separated = false;
    bool single_crossing = false;
    Verdict classic = Verdict::NotApplicable;    // simple graphs with e >= 4n
    Verdict multigraph = Verdict::NotApplicable; // e >= 4n
    Verdict edge_cap = Verdict::NotApplicable;   // separated single-crossing
    Verdict euler = Verdict::NotApplicable;      // separated single-crossing
    Verdict corollary = Verdict::NotApplicable;  // separated single-crossing, e >= 4n

    /// False iff a bound proved for separated single-crossing drawings
    /// (edge cap, Euler, corollary) fails. The classic and multigraph
    /// verdicts depend on the caller's constant and are informational.
    bool theorems_hold() const;
};

/// Measures n, e, m and the crossing count, then applies every bound whose
/// hypotheses the drawing meets. Requires a valid drawing with n >= 2.
BoundReport check_drawing_bounds(const Drawing& d, const Rational& c_param = kDefaultCrossingConstant);

struct ThrackleCheck {
    bool premise_holds = false; // simple, single-crossing, independent pairs all cross once
    bool bound_holds = false;   // e <= 4n
};

ThrackleCheck thrackle_check(const Drawing& d);

/// Exhaustive-mode limits for bisection_width_exact.
inline constexpr std::size_t kBisectionMaxVertices = 10;
inline constexpr std::size_t kBisectionMaxEdges = 16;

struct BisectionResult {
    std::size_t width = 0;
    std::vector<VertexId> part1; // contains vertex 0
    std::vector<VertexId> part2;
    std::vector<EdgeId> deleted_edges;
    bool parts_valid = false;
};

/// Minimum number of deleted edges over all vertex bipartitions with both
/// parts of size at most floor(4n/5), such that no surviving edge joins the
/// parts and both surviving induced drawings are separated single-crossing.
/// Ties go to the smallest bipartition mask, then the first deletion set in
/// combination order. Throws TooLarge beyond the exhaustive limits and
/// TooSmall for n < 2.
BisectionResult bisection_width_exact(const Drawing& d);

/// Re-checks size, cut and separation conditions on a result using
/// independently built subdrawings.
bool verify_bisection(const Drawing& d, const BisectionResult& r);

struct Lemma4Check {
    std::size_t lhs = 0;       // b(G)
    Integer radicand;          // c(G) + sum d_i^2 + n
    double rhs = 0.0;          // 22 sqrt(radicand), for display
    bool holds = false;        // decided exactly
};

/// b(G) <= 22 sqrt(c(G) + sum d_i^2 + n). Requires a separated
/// single-crossing drawing (NotSeparated / NotSingleCrossing otherwise).
Lemma4Check check_lemma4(const Drawing& d);

nlohmann::json bounds_to_json(const BoundReport& r);
nlohmann::json bisection_to_json(const BisectionResult& r);
nlohmann::json lemma4_to_json(const Lemma4Check& c);

} // namespace lensgraph
