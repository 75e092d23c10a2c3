#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atcert/plane_graph.hpp"

namespace atcert {

enum class ConfigKind {
    PendantBlock,
    LowDegreeVertex,
    AdjacentThrees,
    ChainPendantThree,
    ChainTwoMinorTriangles,
    Sun,
    SpecialFiveCycle,
};

std::string config_kind_name(ConfigKind k);

// One reducible configuration instance: role-labeled vertices.
// Role names follow the construction:
//   PendantBlock:            z (cut vertex), b0..bm (block vertices)
//   LowDegreeVertex:         v
//   AdjacentThrees:          u, v
//   ChainPendantThree:       w0..w{k+1}, u0..uk, x
//   ChainTwoMinorTriangles:  w0..w{k+1}, u0..uk, x, y, z
//   Sun:                     v1..v6, u1..u5
//   SpecialFiveCycle:        u1..u6
struct Configuration {
    ConfigKind kind;
    std::vector<std::pair<std::string, int>> roles;

    int role(const std::string& name) const;           // throws if missing
    std::vector<int> roles_prefixed(char prefix) const; // w -> [w0,w1,...] in index order
    std::vector<int> vertex_set() const;                // distinct, ascending
};

// A triangle chain intersecting a minor triangle: spine w[0]=w1..w[k] = w_{k+1},
// apexes u[0..k-1]; length-0 chains have u empty.
struct TriangleChain {
    std::vector<int> w;
    std::vector<int> u;
    int length() const { return static_cast<int>(u.size()); }
};

// (3,4,4)-faces of G avoiding v0, in face-id order.
std::vector<int> find_minor_triangles(const PlaneGraph& g);

// All chains whose first triangle shares exactly the vertex w1 with
// from_triangle: the maximal ones plus the length-0 chain at each 4-vertex.
std::vector<TriangleChain> find_triangle_chains(const PlaneGraph& g, int from_triangle_face);

// Per-kind exhaustive finders (deterministic order, smallest vertices first).
std::vector<Configuration> find_pendant_blocks(const PlaneGraph& g);
std::vector<Configuration> find_low_degree_vertices(const PlaneGraph& g);
std::vector<Configuration> find_adjacent_threes(const PlaneGraph& g);
std::vector<Configuration> find_chain_pendant_threes(const PlaneGraph& g);
std::vector<Configuration> find_chain_two_minor_triangles(const PlaneGraph& g);
std::vector<Configuration> find_suns(const PlaneGraph& g);
std::vector<Configuration> find_special_five_cycles(const PlaneGraph& g);

std::vector<Configuration> find_all(const PlaneGraph& g, ConfigKind kind);

// First configuration under the fixed priority; the chain kinds
// and Sun apply to l=5, the chain kinds and SpecialFiveCycle to l=7, and only
// the first three kinds to l=6. Throws NotInClass.
std::optional<Configuration> detect(const PlaneGraph& g, int l);

// Re-check a configuration's invariants from scratch.
bool validate_configuration(const PlaneGraph& g, const Configuration& cfg);

}  // namespace atcert
