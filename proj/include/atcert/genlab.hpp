#pragma once

#include <functional>
#include <vector>

#include "atcert/common.hpp"
#include "atcert/plane_graph.hpp"

namespace atcert {

struct GeneratorSpec {
    int max_vertices = 9;
    int l = 5;
    int connectivity = 1;          // minimum required (1 or 2)
    unsigned long long seed = 0;   // randomized modes
    long long sample = 0;          // 0 = exhaustive instance stream
};

// Canonical key of a connected embedded graph: minimum traversal encoding
// over all starting darts and both senses (reflection included).
std::vector<int> embedded_canonical_key(const std::vector<std::vector<int>>& rot);

// One rotation system per embedded-isomorphism class of connected plane
// graphs with <= max_vertices vertices, filtered by in_class(., l) at every
// level (the class is hereditary). Deterministic order.
std::vector<std::vector<std::vector<int>>> enumerate_embedded_reps(const GeneratorSpec& spec);

// Full instance stream: every representative with every choice of outer face
// and root on its boundary (or a seeded sample when spec.sample > 0).
// rep_index identifies the representative the instance came from.
void enumerate_class(const GeneratorSpec& spec,
                     const std::function<void(const PlaneGraph&, int rep_index)>& sink);
std::vector<PlaneGraph> enumerate_class_vec(const GeneratorSpec& spec);

// All (outer face, root) instances of one representative, in stream order.
std::vector<PlaneGraph> rep_instances(const std::vector<std::vector<int>>& rot);

// Uniform random simple graph on n labeled vertices, each edge present with
// probability num/den.
std::vector<std::pair<int, int>> random_graph(int n, int num, int den, Rng& rng);

enum class ChoosableVerdict { Choosable, NotChoosable, NoCounterexampleFound };

struct ChoosableResult {
    ChoosableVerdict verdict = ChoosableVerdict::Choosable;
    // Witness list assignment when NotChoosable.
    std::vector<std::vector<int>> witness;
};

// Exhaustive mode sweeps every k-list assignment from a universe of 2k-1
// colors (the first vertex's list fixed up to color permutation); |V| <= 8 or
// TooLarge. Random mode tries `budget` sampled assignments and can only
// report NoCounterexampleFound.
ChoosableResult brute_force_choosable(int n, const std::vector<std::pair<int, int>>& edges,
                                      int k, bool exhaustive, long long budget = 0,
                                      unsigned long long seed = 0);

}  // namespace atcert
