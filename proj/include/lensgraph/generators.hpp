#pragma once

#include "lensgraph/drawing.hpp"

#include <cstdint>
#include <string>

namespace lensgraph {

enum class Family { Semicircle, NestedLenses, ConvexComplete, RandomSeparated };

const char* to_string(Family f);
Family parse_family(const std::string& name); // semicircle | nested | convex | random

/// Parameters for any generator; fields unused by a family are ignored.
struct GeneratorSpec {
    Family family = Family::NestedLenses;
    int n = 4;
    int k = 3;
    std::uint64_t seed = 0;
    int segments_per_arc = 32;
    int extra_parallel = 0;
    std::string label;
};

Drawing generate(const GeneratorSpec& spec);

/// Vertices 1..n on the x-axis; for every i <= k < j an edge made of an upper
/// semicircle from i to a point p in (k, k+1) and a lower one from p to j,
/// each discretized into `segments_per_arc` chords with rational points on
/// the true circles. The output is certified before it is returned: valid,
/// pair crossing counts equal to those of the true semicircles, separated.
/// Throws DegenerateDiscretization if no perturbation attempt certifies.
Drawing gen_semicircle(int n, int segments_per_arc = 32);

/// Crossings between the true semicircle arcs of edges a and b of
/// gen_semicircle(n): one per interleaving upper pair and lower pair.
std::size_t semicircle_expected_crossings(int n, EdgeId a, EdgeId b);

/// Hubs (-k-1, 0) and (k+1, 0) joined by k nested two-segment bumps through
/// (0, h), h = 1..k, with one witness vertex (0, h + 1/2) in each lens.
Drawing gen_nested_lenses(int k);

/// Straight-line K_n on rational points of a circle, in general position.
Drawing gen_convex_complete(int n);

/// Random straight-line drawing in general position plus up to
/// `extra_parallel` parallel two-segment detours, each kept only if the
/// result stays valid, single-crossing and separated.
Drawing gen_random_separated(int n, int extra_parallel, std::uint64_t seed);

} // namespace lensgraph
