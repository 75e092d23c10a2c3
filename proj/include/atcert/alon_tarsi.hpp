#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atcert/common.hpp"
#include "atcert/plane_graph.hpp"

namespace atcert {

// An orientation of a simple graph: one arc (tail -> head) per edge.
// The base graph is the undirected projection; the embedding is irrelevant.
struct Orientation {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;

    std::vector<int> out_degrees() const;
    int max_out_degree() const;
    int out_degree(int v) const;
    // Undirected edge set (u < v, sorted).
    std::vector<std::pair<int, int>> base_edges() const;
};

// diff(D) = |even spanning Eulerian sub-digraphs| - |odd ones|, exact.
// Pruned backtracking over arc subsets; TooLarge above caps.diff_edge_cap.
BigInt diff(const Orientation& d, const Caps& caps = {});

// Serial reference: plain sweep over all 2^|arcs| subsets. Kept as the
// independent baseline for tests and the benchmark; refuses |arcs| > 28.
BigInt diff_reference(const Orientation& d);

// OpenMP kernel: same recursion split over direction prefixes.
BigInt diff_parallel(const Orientation& d, const Caps& caps = {});

bool is_AT(const Orientation& d, const Caps& caps = {});
// AT with max out-degree <= 2 and out-degree 0 at v0.
bool is_good(const Orientation& d, int v0, const Caps& caps = {});

// Coefficient of prod x_v^eta(v) in prod_{uv in E, u<v} (x_v - x_u),
// ascending vertex ids as the fixed order. Zero when sum(eta) != |E|.
// Only the magnitude is contract-bearing; the sign follows this order.
BigInt poly_coefficient(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& eta, const Caps& caps = {});
BigInt poly_coefficient(const PlaneGraph& g, const std::vector<int>& eta,
                        const Caps& caps = {});

// Least k such that some orientation with out-degrees < k has diff != 0.
// Deterministic search: edges in id order, direction toward the smaller
// vertex id first. Optional witness receives the first AT orientation found.
int at_number(int n, const std::vector<std::pair<int, int>>& edges,
              const Caps& caps = {}, Orientation* witness = nullptr);
int at_number(const PlaneGraph& g, const Caps& caps = {}, Orientation* witness = nullptr);

// First good orientation in the same deterministic order, or nullopt.
std::optional<Orientation> find_good_orientation(int n,
                                                 const std::vector<std::pair<int, int>>& edges,
                                                 int v0, const Caps& caps = {});
std::optional<Orientation> find_good_orientation(const PlaneGraph& g, int v0,
                                                 const Caps& caps = {});

// Helpers shared with the certificate verifier.
bool arcs_acyclic(int n, const std::vector<std::pair<int, int>>& arcs);
std::vector<std::pair<int, int>> induced_arcs(const std::vector<std::pair<int, int>>& arcs,
                                              const std::vector<char>& keep);

}  // namespace atcert
