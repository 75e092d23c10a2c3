#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atcert/alon_tarsi.hpp"
#include "atcert/configurations.hpp"
#include "atcert/plane_graph.hpp"

namespace atcert {

// Pairwise disjoint edges of G, none covering the root. Kept sorted (u < v).
using Matching = std::vector<std::pair<int, int>>;

// The reduction history, as a tree so block splits and component splits can
// fork. All ids are in the certificate's root-graph numbering.
struct TraceNode {
    enum class Type { Base, Reduce, Split, Components };
    Type type = Type::Base;

    std::vector<int> vertices;  // region this node certifies

    // Reduce
    std::optional<Configuration> config;
    std::vector<int> removed;                         // X
    std::vector<std::pair<int, int>> matching_added;
    std::vector<std::pair<int, int>> arcs_added;      // D[X]
    std::vector<std::pair<int, int>> cut_arcs;        // X -> rest

    // Split
    std::vector<int> block;  // V(B), z included
    int z = -1;

    // Base
    bool absent_fallback = false;  // detect returned Absent above threshold

    std::vector<TraceNode> children;
};

struct Certificate {
    Matching matching;
    Orientation orientation;  // of G - M
    TraceNode trace;
};

// Pure surgery data for one configuration (PendantBlock carries the split
// instead). Throws ConfigurationStale when cfg does not match g.
struct ReduceStep {
    ConfigKind kind;
    std::vector<int> removed;
    std::vector<std::pair<int, int>> matching_added;
    std::vector<std::pair<int, int>> arcs_added;
    std::vector<int> block;
    int z = -1;
};
ReduceStep reduce_step_data(const PlaneGraph& g, const Configuration& cfg);

// The spec-level operation: the reduced graph (ids re-densified in ascending
// survivor order) together with the lift data. For PendantBlock the reduced
// graph is G - (B - {z}).
std::pair<PlaneGraph, ReduceStep> reduce_step(const PlaneGraph& g, const Configuration& cfg);

// Extend a certificate of the reduced graph through one non-split reduction:
// child ids are translated via new_to_old, the surgery's matching and arcs
// are added, and every edge between X and the rest is oriented outward.
Certificate lift_reduction(const PlaneGraph& g, const Configuration& cfg,
                           const Certificate& child, const std::vector<int>& new_to_old);

// The existence proof as an algorithm: a valid matching plus a good orientation of
// G - M for any class member. Brute force below 7 vertices, configuration
// surgeries above, brute-force fallback (never silent) if detection fails.
Certificate extract(const PlaneGraph& g, int l, const Caps& caps = {});

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::string diff_value;  // exact value when enumerated, "" otherwise
    bool used_trace_factorization = false;
    bool all_pass() const;
};

// Independent checks: matching validity, orientation base, degree caps, and
// diff != 0 (full enumeration within caps, one-way-cut factorization along
// the trace beyond them).
VerifyReport verify_certificate(const PlaneGraph& g, const Certificate& cert,
                                const Caps& caps = {});

}  // namespace atcert
