#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atcert/errors.hpp"

namespace atcert {

// Directed edge side (u -> v). Face walks are sequences of darts.
using Dart = std::pair<int, int>;

struct Face {
    int id = -1;
    std::vector<Dart> walk;  // closed boundary walk; empty for an isolated vertex
    int anchor = -1;         // the vertex itself when walk is empty
    int component = -1;

    int degree() const { return static_cast<int>(walk.size()); }
    // Boundary vertices in walk order (with repetitions at cut vertices).
    std::vector<int> walk_vertices() const;
    // Distinct boundary vertices, ascending.
    std::vector<int> vertex_set() const;
    bool contains_vertex(int v) const;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> block_vertices;                 // ascending ids
    std::vector<std::vector<std::pair<int, int>>> block_edges;    // u < v
    std::vector<int> cut_vertices;                                // ascending
};

// Plane-embedded simple graph given by a rotation system (counterclockwise
// neighbor order per vertex). Faces are derived by dart tracing and validated
// against Euler's formula per connected component. Immutable after build.
class PlaneGraph {
public:
    // Validates and derives everything. Rejects disconnected input.
    // outer_hint: boundary vertex sequence of the intended outer face, or
    // empty to apply the default rule (root's face of maximum degree,
    // ties by smallest face id).
    static PlaneGraph build(std::vector<std::vector<int>> rotation, int root,
                            const std::vector<int>& outer_hint = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int root() const { return root_; }
    int outer_face() const { return outer_face_; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }

    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }

    bool adjacent(int u, int v) const;
    int edge_id(int u, int v) const;  // -1 when absent
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }

    // Face on the traced side of dart (u -> v).
    int face_at(int u, int v) const;
    // Faces around v in rotation order: entry i is the face traced from
    // dart (v, rot[v][i]). Exactly degree(v) corners.
    std::vector<int> corner_faces(int v) const;

    int component_count() const { return comp_count_; }
    int component_of(int v) const { return comp_[v]; }

    // Exhaustive: true iff some (not necessarily facial) cycle has exactly k vertices.
    bool has_cycle_of_length(int k) const;
    // No 4-cycle and no l-cycle, l in {5,6,7}.
    bool in_class(int l) const;

    // Induced embedding on V - S, ids re-densified in ascending survivor
    // order. Throws RootDeleted if S covers the root. new_to_old, when
    // given, receives the survivor id map.
    PlaneGraph delete_vertices(const std::vector<int>& S,
                               std::vector<int>* new_to_old = nullptr) const;

    // Induced embedding on a vertex subset (used for block/component
    // recursion). new_root is in original ids and must be in keep.
    PlaneGraph induced(const std::vector<int>& keep, int new_root,
                       std::vector<int>* new_to_old = nullptr) const;

    BlockDecomposition blocks() const;

    std::string to_dot() const;

private:
    PlaneGraph() = default;
    static PlaneGraph build_impl(std::vector<std::vector<int>> rotation, int root,
                                 const std::vector<int>& outer_hint,
                                 bool allow_disconnected);

    void derive_edges();
    void derive_components();
    void trace_faces();
    void choose_outer(const std::vector<int>& outer_hint);

    int n_ = 0;
    int root_ = 0;
    int outer_face_ = -1;
    std::vector<std::vector<int>> rot_;
    std::vector<std::pair<int, int>> edges_;   // u < v, lexicographic
    std::vector<Face> faces_;
    std::vector<std::vector<int>> face_of_dart_;  // [v][rotation index] -> face id
    std::vector<int> comp_;
    int comp_count_ = 0;

    friend class PlaneGraphInternal;
};

// Internal escape hatch: build allowing disconnected graphs (delete_vertices
// results handed to the reducer). Not part of the public contract.
class PlaneGraphInternal {
public:
    static PlaneGraph build_any(std::vector<std::vector<int>> rotation, int root,
                                const std::vector<int>& outer_hint = {});
    // Builds with the outer face identified by a dart on its boundary
    // (unambiguous where vertex-sequence hints are not).
    static PlaneGraph build_with_outer_dart(std::vector<std::vector<int>> rotation, int root,
                                            Dart outer_dart);
};

}  // namespace atcert
