#include "atcert/plane_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace atcert {

std::vector<int> Face::walk_vertices() const {
    std::vector<int> out;
    out.reserve(walk.size());
    for (const auto& d : walk) out.push_back(d.first);
    if (walk.empty() && anchor >= 0) out.push_back(anchor);
    return out;
}

std::vector<int> Face::vertex_set() const {
    std::vector<int> out = walk_vertices();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Face::contains_vertex(int v) const {
    if (walk.empty()) return anchor == v;
    for (const auto& d : walk)
        if (d.first == v) return true;
    return false;
}

PlaneGraph PlaneGraph::build(std::vector<std::vector<int>> rotation, int root,
                             const std::vector<int>& outer_hint) {
    return build_impl(std::move(rotation), root, outer_hint, false);
}

PlaneGraph PlaneGraphInternal::build_any(std::vector<std::vector<int>> rotation, int root,
                                         const std::vector<int>& outer_hint) {
    return PlaneGraph::build_impl(std::move(rotation), root, outer_hint, true);
}

PlaneGraph PlaneGraphInternal::build_with_outer_dart(std::vector<std::vector<int>> rotation,
                                                     int root, Dart outer_dart) {
    PlaneGraph g = PlaneGraph::build_impl(std::move(rotation), root, {}, false);
    g.outer_face_ = g.face_at(outer_dart.first, outer_dart.second);
    if (!g.faces_[g.outer_face_].contains_vertex(root))
        throw RootNotOnOuterFace("root is not on the requested outer face");
    return g;
}

PlaneGraph PlaneGraph::build_impl(std::vector<std::vector<int>> rotation, int root,
                                  const std::vector<int>& outer_hint,
                                  bool allow_disconnected) {
    PlaneGraph g;
    g.n_ = static_cast<int>(rotation.size());
    g.rot_ = std::move(rotation);
    if (g.n_ == 0) throw InconsistentRotation("empty vertex set");
    if (root < 0 || root >= g.n_) throw UnknownVertex("root out of range");
    g.root_ = root;

    for (int v = 0; v < g.n_; ++v) {
        std::set<int> seen;
        for (int u : g.rot_[v]) {
            if (u < 0 || u >= g.n_) throw InconsistentRotation("neighbor id out of range");
            if (u == v) throw InconsistentRotation("loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw InconsistentRotation("parallel edge at vertex " + std::to_string(v));
        }
    }
    for (int v = 0; v < g.n_; ++v)
        for (int u : g.rot_[v]) {
            bool back = std::find(g.rot_[u].begin(), g.rot_[u].end(), v) != g.rot_[u].end();
            if (!back)
                throw InconsistentRotation("edge " + std::to_string(v) + "-" + std::to_string(u) +
                                           " missing from the other rotation");
        }

    g.derive_edges();
    g.derive_components();
    if (!allow_disconnected && g.comp_count_ != 1)
        throw InconsistentRotation("disconnected input (components are handled by the reducer)");
    g.trace_faces();
    g.choose_outer(outer_hint);
    return g;
}

void PlaneGraph::derive_edges() {
    edges_.clear();
    for (int v = 0; v < n_; ++v)
        for (int u : rot_[v])
            if (v < u) edges_.emplace_back(v, u);
    std::sort(edges_.begin(), edges_.end());
}

void PlaneGraph::derive_components() {
    comp_.assign(n_, -1);
    comp_count_ = 0;
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (comp_[s] >= 0) continue;
        comp_[s] = comp_count_;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : rot_[v])
                if (comp_[u] < 0) {
                    comp_[u] = comp_count_;
                    stack.push_back(u);
                }
        }
        ++comp_count_;
    }
}

void PlaneGraph::trace_faces() {
    faces_.clear();
    face_of_dart_.assign(n_, {});
    for (int v = 0; v < n_; ++v) face_of_dart_[v].assign(rot_[v].size(), -1);

    auto rot_index = [&](int v, int u) -> int {
        const auto& r = rot_[v];
        return static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
    };

    // next dart of (u -> v): (v -> w) with w the predecessor of u in v's
    // counterclockwise rotation; each dart lies on exactly one face walk.
    auto trace_from = [&](int v0, int i0) {
        Face f;
        f.id = static_cast<int>(faces_.size());
        int v = v0, i = i0;
        do {
            face_of_dart_[v][i] = f.id;
            int u = rot_[v][i];
            f.walk.emplace_back(v, u);
            int j = rot_index(u, v);
            int d = static_cast<int>(rot_[u].size());
            int k = (j + d - 1) % d;
            v = u;
            i = k;
        } while (!(v == v0 && i == i0));
        f.component = comp_[v0];
        faces_.push_back(std::move(f));
    };

    // Face ids in tracing order, starting at the root's first incidence.
    if (!rot_[root_].empty()) trace_from(root_, 0);
    if (rot_[root_].empty()) {
        Face f;
        f.id = 0;
        f.anchor = root_;
        f.component = comp_[root_];
        faces_.push_back(std::move(f));
    }
    for (int v = 0; v < n_; ++v) {
        if (rot_[v].empty()) {
            if (v == root_) continue;
            Face f;
            f.id = static_cast<int>(faces_.size());
            f.anchor = v;
            f.component = comp_[v];
            faces_.push_back(std::move(f));
            continue;
        }
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
            if (face_of_dart_[v][i] < 0) trace_from(v, i);
    }

    // Euler per connected component (genus 0).
    std::vector<int> vs(comp_count_, 0), es(comp_count_, 0), fs(comp_count_, 0);
    for (int v = 0; v < n_; ++v) ++vs[comp_[v]];
    for (const auto& e : edges_) ++es[comp_[e.first]];
    for (const auto& f : faces_) ++fs[f.component];
    for (int c = 0; c < comp_count_; ++c)
        if (vs[c] - es[c] + fs[c] != 2)
            throw NotPlanarEmbedding("face tracing violates Euler's formula (component " +
                                     std::to_string(c) + ": V=" + std::to_string(vs[c]) +
                                     " E=" + std::to_string(es[c]) + " F=" + std::to_string(fs[c]) + ")");
}

namespace {
// Cyclic-sequence match up to rotation and reflection.
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const int n = static_cast<int>(a.size());
    if (n == 0) return true;
    for (int dir = 0; dir < 2; ++dir) {
        for (int s = 0; s < n; ++s) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int j = dir == 0 ? (s + i) % n : (s - i % n + 2 * n) % n;
                ok = a[i] == b[j];
            }
            if (ok) return true;
        }
    }
    return false;
}
}  // namespace

void PlaneGraph::choose_outer(const std::vector<int>& outer_hint) {
    outer_face_ = -1;
    if (!outer_hint.empty()) {
        for (const auto& f : faces_) {
            if (f.component != comp_[root_]) continue;
            if (f.walk.empty()) {
                if (outer_hint.size() == 1 && outer_hint[0] == f.anchor) {
                    outer_face_ = f.id;
                    break;
                }
                continue;
            }
            if (cyclic_equal(outer_hint, f.walk_vertices())) {
                outer_face_ = f.id;
                break;
            }
        }
        if (outer_face_ < 0) throw RootNotOnOuterFace("outer face hint matches no face");
    } else {
        int best = -1;
        for (const auto& f : faces_) {
            if (f.component != comp_[root_] || !f.contains_vertex(root_)) continue;
            if (best < 0 || f.degree() > faces_[best].degree()) best = f.id;
        }
        outer_face_ = best;
    }
    if (outer_face_ < 0 || !faces_[outer_face_].contains_vertex(root_))
        throw RootNotOnOuterFace("root is not on the outer face boundary");
}

bool PlaneGraph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& r = rot_[u].size() <= rot_[v].size() ? rot_[u] : rot_[v];
    int other = rot_[u].size() <= rot_[v].size() ? v : u;
    return std::find(r.begin(), r.end(), other) != r.end();
}

int PlaneGraph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

int PlaneGraph::face_at(int u, int v) const {
    const auto& r = rot_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end()) throw UnknownVertex("face_at on a non-edge");
    return face_of_dart_[u][it - r.begin()];
}

std::vector<int> PlaneGraph::corner_faces(int v) const {
    std::vector<int> out;
    out.reserve(rot_[v].size());
    for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i)
        out.push_back(face_of_dart_[v][i]);
    return out;
}

bool PlaneGraph::has_cycle_of_length(int k) const {
    if (k < 3 || k > 7) throw Error("has_cycle_of_length supports k in 3..7");
    // Path DFS anchored at the cycle's minimum vertex; exhaustive at desk scale.
    std::vector<char> used(n_, 0);
    std::vector<int> path;
    bool found = false;
    auto dfs = [&](auto&& self, int s, int v) -> void {
        if (found) return;
        if (static_cast<int>(path.size()) == k) {
            if (adjacent(v, s)) found = true;
            return;
        }
        for (int u : rot_[v]) {
            if (u <= s || used[u]) continue;
            used[u] = 1;
            path.push_back(u);
            self(self, s, u);
            path.pop_back();
            used[u] = 0;
            if (found) return;
        }
    };
    for (int s = 0; s < n_ && !found; ++s) {
        used[s] = 1;
        path.assign(1, s);
        dfs(dfs, s, s);
        used[s] = 0;
    }
    return found;
}

bool PlaneGraph::in_class(int l) const {
    if (l != 5 && l != 6 && l != 7) throw Error("class parameter l must be 5, 6 or 7");
    return !has_cycle_of_length(4) && !has_cycle_of_length(l);
}

PlaneGraph PlaneGraph::delete_vertices(const std::vector<int>& S,
                                       std::vector<int>* new_to_old) const {
    std::vector<char> drop(n_, 0);
    for (int v : S) {
        if (v < 0 || v >= n_) throw UnknownVertex("delete_vertices: vertex out of range");
        drop[v] = 1;
    }
    if (drop[root_]) throw RootDeleted("delete_vertices would remove the root");
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!drop[v]) keep.push_back(v);
    return induced(keep, root_, new_to_old);
}

PlaneGraph PlaneGraph::induced(const std::vector<int>& keep, int new_root,
                               std::vector<int>* new_to_old) const {
    std::vector<int> old_to_new(n_, -1);
    std::vector<int> order = keep;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) old_to_new[order[i]] = i;
    if (new_root < 0 || new_root >= n_ || old_to_new[new_root] < 0)
        throw UnknownVertex("induced: root not among kept vertices");

    std::vector<std::vector<int>> rot(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        for (int u : rot_[order[i]])
            if (old_to_new[u] >= 0) rot[i].push_back(old_to_new[u]);
    }
    if (new_to_old) *new_to_old = order;
    return PlaneGraphInternal::build_any(std::move(rot), old_to_new[new_root]);
}

BlockDecomposition PlaneGraph::blocks() const {
    BlockDecomposition out;
    std::vector<int> num(n_, -1), low(n_, 0), parent(n_, -1);
    std::vector<char> is_cut(n_, 0);
    std::vector<std::pair<int, int>> estack;
    int counter = 0;

    auto emit_block = [&](std::pair<int, int> top_edge) {
        std::vector<std::pair<int, int>> es;
        while (true) {
            auto e = estack.back();
            estack.pop_back();
            es.push_back(e.first < e.second ? e : std::make_pair(e.second, e.first));
            if (e == top_edge) break;
        }
        std::sort(es.begin(), es.end());
        std::vector<int> vs;
        for (auto& e : es) {
            vs.push_back(e.first);
            vs.push_back(e.second);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        out.block_vertices.push_back(std::move(vs));
        out.block_edges.push_back(std::move(es));
    };

    auto dfs = [&](auto&& self, int v) -> void {
        num[v] = low[v] = counter++;
        int children = 0;
        for (int u : rot_[v]) {
            if (num[u] < 0) {
                estack.emplace_back(v, u);
                parent[u] = v;
                ++children;
                self(self, u);
                low[v] = std::min(low[v], low[u]);
                if ((parent[v] < 0 && children > 1) || (parent[v] >= 0 && low[u] >= num[v])) {
                    is_cut[v] = 1;
                }
                if (low[u] >= num[v]) emit_block({v, u});
            } else if (u != parent[v] && num[u] < num[v]) {
                estack.emplace_back(v, u);
                low[v] = std::min(low[v], num[u]);
            }
        }
    };

    for (int s = 0; s < n_; ++s)
        if (num[s] < 0 && !rot_[s].empty()) dfs(dfs, s);
    for (int v = 0; v < n_; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);

    // Deterministic ordering: blocks by smallest vertex, then lexicographic.
    std::vector<int> idx(out.block_vertices.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return out.block_vertices[a] < out.block_vertices[b];
    });
    BlockDecomposition sorted;
    sorted.cut_vertices = out.cut_vertices;
    for (int i : idx) {
        sorted.block_vertices.push_back(std::move(out.block_vertices[i]));
        sorted.block_edges.push_back(std::move(out.block_edges[i]));
    }
    return sorted;
}

std::string PlaneGraph::to_dot() const {
    std::ostringstream os;
    os << "graph G {\n";
    os << "  // root=" << root_ << " outer_face=" << outer_face_ << "\n";
    for (const auto& f : faces_) {
        os << "  // face " << f.id << " deg=" << f.degree() << ":";
        for (int v : f.walk_vertices()) os << " " << v;
        os << "\n";
    }
    for (int v = 0; v < n_; ++v) os << "  " << v << ";\n";
    for (const auto& e : edges_) os << "  " << e.first << " -- " << e.second << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace atcert
