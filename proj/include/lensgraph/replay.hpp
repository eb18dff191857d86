#pragma once

#include "lensgraph/crossings.hpp"
#include "lensgraph/drawing.hpp"
#include "lensgraph/exact_real.hpp"
#include "lensgraph/rational.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lensgraph {

/// One inequality evaluated on an instance. Informational checkpoints are
/// reported but never count as failures.
struct Checkpoint {
    std::string name;
    std::string relation; // "<=", ">=", "<", "=="
    std::string lhs;
    std::string rhs;
    double lhs_approx = 0.0;
    double rhs_approx = 0.0;
    bool pass = false;
    bool informational = false;
};

/// Compares exactly and records both sides.
Checkpoint make_checkpoint(std::string name, const Rational& lhs, const std::string& relation, const Rational& rhs,
                           bool informational = false);
Checkpoint make_checkpoint(std::string name, const Rational& lhs, const std::string& relation, const LogTerm& rhs,
                           bool informational = false);

bool checkpoints_pass(const std::vector<Checkpoint>& cps);

enum class ReplayBranch { FewLenses, ManyLenses };

const char* to_string(ReplayBranch b);

struct ReplayTrial {
    std::size_t index = 0;
    std::vector<VertexId> w;
    std::size_t empty_lenses = 0;  // |L^o(W)|
    std::size_t gprime_edges = 0;  // one bounding edge per empty lens
    bool lemma3_ok = true;         // independent edges of G' pairwise cross
    bool lemma2_ok = true;         // |E(G')| <= 4|W|
};

struct ReplayTrace {
    std::size_t n = 0;
    std::size_t e = 0;
    std::uint64_t seed = 0;
    ReplayBranch branch = ReplayBranch::FewLenses;
    std::size_t lens_total = 0;
    std::size_t t = 0;                  // ceil(log2 n)
    std::vector<std::size_t> classes;   // |L_1|..|L_t|
    std::optional<unsigned> chosen_k;
    std::optional<VertexId> heavy_vertex;
    std::size_t heavy_count = 0;        // d_k(v)
    std::size_t origin_lens_count = 0;  // |L^o|
    std::vector<EdgePair> origin_lenses;
    std::vector<ReplayTrial> trials;
    std::vector<Checkpoint> checkpoints;

    bool ok() const { return checkpoints_pass(checkpoints); }
};

/// Runs the lens-counting argument on a separated single-crossing drawing.
/// Trial W_i is drawn from (seed, i) only. Throws InvalidDrawing,
/// NotSeparated, NotSingleCrossing or DomainError (n < 2).
ReplayTrace replay_theorem1(const Drawing& d, std::uint64_t seed, std::size_t trials);

struct SamplingSummary {
    unsigned k = 1;
    Rational p;
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t origin_lens_count = 0;
    double mean_w = 0.0;
    double expected_w = 0.0;       // p n
    double standard_error = 0.0;   // sqrt(n p (1 - p) / trials)
    bool w_within_4se = true;
    double mean_empty = 0.0;
    Rational expected_empty;       // sum over L^o of p^2 (1 - p)^|l|
    Rational class_lower_bound;    // p^2 (1 - p)^(2^k) |L^o|
    bool expectation_meets_bound = true;
};

/// Empirical |W| and |L^o(W)| over seeded trials. k defaults to the class
/// chosen by the replay (1 when there are no lenses); p = 2^-k.
SamplingSummary sampling_statistics(const Drawing& d, std::uint64_t seed, std::size_t trials,
                                    std::optional<unsigned> k_override = std::nullopt);

struct DecompositionMember {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::size_t c = 0;
    bool split = false;
    std::optional<std::size_t> width; // b(H) when split
};

struct DecompositionStep {
    std::size_t index = 0;
    std::vector<DecompositionMember> members;
};

struct DecompositionTrace {
    std::size_t n = 0;
    std::size_t e = 0;
    std::size_t delta = 0;           // ceil(2e/n)
    LogTerm k_threshold;
    bool k_overridden = false;
    std::optional<std::size_t> stop_rule_step; // i0 when the stop rule applies
    std::size_t stop_step = 0;
    std::string stop_reason;
    std::vector<DecompositionStep> families;
    std::size_t edges_deleted_total = 0;
    std::size_t final_heavy_edges = 0;
    std::vector<std::string> notes;
    std::vector<Checkpoint> checkpoints;

    bool ok() const { return checkpoints_pass(checkpoints); }
};

struct DecomposeOptions {
    bool require_degree_cap = true; // DegreeTooHigh when max degree > delta
};

/// Recursive bisection process. Without an override the threshold is
/// 1e-10 e^2 / (n^2 log2(e/n)), or 0 when e <= n. Throws TooLarge if a
/// member to be split exceeds the exhaustive bisection limits.
DecompositionTrace decompose(const Drawing& d, const std::optional<Rational>& k_override = std::nullopt,
                             const DecomposeOptions& options = {});

nlohmann::json checkpoints_to_json(const std::vector<Checkpoint>& cps);
nlohmann::json replay_to_json(const ReplayTrace& t);
nlohmann::json sampling_to_json(const SamplingSummary& s);
nlohmann::json decomposition_to_json(const DecompositionTrace& t);

} // namespace lensgraph
