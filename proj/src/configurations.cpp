#include "atcert/configurations.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "atcert/errors.hpp"

namespace atcert {

std::string config_kind_name(ConfigKind k) {
    switch (k) {
        case ConfigKind::PendantBlock: return "PendantBlock";
        case ConfigKind::LowDegreeVertex: return "LowDegreeVertex";
        case ConfigKind::AdjacentThrees: return "AdjacentThrees";
        case ConfigKind::ChainPendantThree: return "ChainPendantThree";
        case ConfigKind::ChainTwoMinorTriangles: return "ChainTwoMinorTriangles";
        case ConfigKind::Sun: return "Sun";
        case ConfigKind::SpecialFiveCycle: return "SpecialFiveCycle";
    }
    return "?";
}

int Configuration::role(const std::string& name) const {
    for (const auto& r : roles)
        if (r.first == name) return r.second;
    throw Error("configuration has no role " + name);
}

std::vector<int> Configuration::roles_prefixed(char prefix) const {
    std::vector<std::pair<int, int>> found;  // (index, vertex)
    for (const auto& r : roles) {
        if (r.first.size() >= 2 && r.first[0] == prefix &&
            std::all_of(r.first.begin() + 1, r.first.end(), [](char c) { return std::isdigit(c); }))
            found.emplace_back(std::stoi(r.first.substr(1)), r.second);
    }
    std::sort(found.begin(), found.end());
    std::vector<int> out;
    for (auto& p : found) out.push_back(p.second);
    return out;
}

std::vector<int> Configuration::vertex_set() const {
    std::vector<int> out;
    for (const auto& r : roles) out.push_back(r.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// G-edges inside `verts` must all be in `prescribed` (u < v pairs), and all
// prescribed edges must exist. Configurations with extra internal edges are
// not instances of the intended shape and would break the surgery.
bool internal_edges_exactly(const PlaneGraph& g, const std::vector<int>& verts,
                            std::set<std::pair<int, int>> prescribed) {
    for (const auto& e : prescribed)
        if (!g.adjacent(e.first, e.second)) return false;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            int a = std::min(verts[i], verts[j]), b = std::max(verts[i], verts[j]);
            if (g.adjacent(a, b) && !prescribed.count({a, b})) return false;
        }
    return true;
}

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

std::set<std::array<int, 3>> triangle_faces_of(const PlaneGraph& g) {
    std::set<std::array<int, 3>> out;
    for (const auto& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto vs = f.vertex_set();
        if (vs.size() != 3) continue;
        out.insert({vs[0], vs[1], vs[2]});
    }
    return out;
}

// 3-faces of G - {v0}, mapped back to original ids. Chain triangles live there.
std::set<std::array<int, 3>> triangle_faces_minus_root(const PlaneGraph& g) {
    std::set<std::array<int, 3>> out;
    if (g.vertex_count() <= 3) return out;
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != g.root()) keep.push_back(v);
    std::vector<int> new_to_old;
    PlaneGraph h = g.induced(keep, keep[0], &new_to_old);
    for (const auto& f : h.faces()) {
        if (f.degree() != 3) continue;
        auto vs = f.vertex_set();
        if (vs.size() != 3) continue;
        std::array<int, 3> t{new_to_old[vs[0]], new_to_old[vs[1]], new_to_old[vs[2]]};
        std::sort(t.begin(), t.end());
        out.insert(t);
    }
    return out;
}

std::vector<int> config_sort_key(const Configuration& c) {
    std::vector<int> key = c.vertex_set();
    for (const auto& r : c.roles) key.push_back(r.second);
    return key;
}

void sort_configs(std::vector<Configuration>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Configuration& a, const Configuration& b) {
        return config_sort_key(a) < config_sort_key(b);
    });
}

// Chain search state shared by the two chain-configuration finders.
struct ChainWalker {
    const PlaneGraph& g;
    std::set<std::array<int, 3>> chain_tris;  // (4,4,4)-faces of G - {v0}

    explicit ChainWalker(const PlaneGraph& pg) : g(pg) {
        for (const auto& t : triangle_faces_minus_root(g)) {
            if (g.degree(t[0]) == 4 && g.degree(t[1]) == 4 && g.degree(t[2]) == 4)
                chain_tris.insert(t);
        }
    }

    // Visits every chain (including prefixes) starting at spine vertex w1 of
    // the minor triangle; `visit(chain, extendable)` is called for each.
    template <typename F>
    void walk(const std::vector<int>& t0, int w1, F&& visit) const {
        TriangleChain chain;
        chain.w.push_back(w1);
        std::set<int> used(t0.begin(), t0.end());
        rec(chain, used, visit);
    }

    template <typename F>
    void rec(TriangleChain& chain, std::set<int>& used, F&& visit) const {
        int end = chain.w.back();
        std::vector<std::array<int, 3>> exts;
        for (const auto& t : chain_tris) {
            if (std::find(t.begin(), t.end(), end) == t.end()) continue;
            int overlap = 0;
            for (int v : t) overlap += used.count(v) ? 1 : 0;
            if (overlap == 1) exts.push_back(t);
        }
        visit(static_cast<const TriangleChain&>(chain), !exts.empty());
        if (static_cast<int>(chain.w.size()) > g.face_count()) return;  // cap
        for (const auto& t : exts) {
            std::vector<int> others;
            for (int v : t)
                if (v != end) others.push_back(v);
            for (int pick = 0; pick < 2; ++pick) {
                int w_next = others[pick], u_next = others[1 - pick];
                chain.w.push_back(w_next);
                chain.u.push_back(u_next);
                used.insert(others[0]);
                used.insert(others[1]);
                rec(chain, used, visit);
                used.erase(others[0]);
                used.erase(others[1]);
                chain.w.pop_back();
                chain.u.pop_back();
            }
        }
    }
};

// Prescribed internal edges of a chain configuration: triangle edges of
// T_0..T_k with T_i = [w_i, w_{i+1}, u_i].
std::set<std::pair<int, int>> chain_edges(const std::vector<int>& w, const std::vector<int>& u) {
    std::set<std::pair<int, int>> es;
    auto add = [&](int a, int b) { es.insert({std::min(a, b), std::max(a, b)}); };
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        add(w[i], w[i + 1]);
        add(w[i], u[i]);
        add(w[i + 1], u[i]);
    }
    return es;
}

}  // namespace

std::vector<int> find_minor_triangles(const PlaneGraph& g) {
    std::vector<int> out;
    for (const auto& f : g.faces()) {
        if (f.degree() != 3) continue;
        auto vs = f.vertex_set();
        if (vs.size() != 3 || f.contains_vertex(g.root())) continue;
        std::array<int, 3> degs{g.degree(vs[0]), g.degree(vs[1]), g.degree(vs[2])};
        std::sort(degs.begin(), degs.end());
        if (degs == std::array<int, 3>{3, 4, 4}) out.push_back(f.id);
    }
    return out;
}

std::vector<TriangleChain> find_triangle_chains(const PlaneGraph& g, int from_triangle_face) {
    auto minors = find_minor_triangles(g);
    if (std::find(minors.begin(), minors.end(), from_triangle_face) == minors.end())
        throw Error("find_triangle_chains: from_triangle is not a minor triangle");
    auto vs = g.face(from_triangle_face).vertex_set();
    std::vector<TriangleChain> out;
    ChainWalker walker(g);
    for (int w1 : vs) {
        if (g.degree(w1) != 4) continue;
        walker.walk(vs, w1, [&](const TriangleChain& c, bool extendable) {
            if (c.length() == 0 || !extendable) out.push_back(c);
        });
    }
    return out;
}

std::vector<Configuration> find_pendant_blocks(const PlaneGraph& g) {
    std::vector<Configuration> out;
    auto bd = g.blocks();
    if (bd.block_vertices.size() < 2) return out;
    std::set<int> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
    for (const auto& bv : bd.block_vertices) {
        std::vector<int> in_cut;
        for (int v : bv)
            if (cuts.count(v)) in_cut.push_back(v);
        if (in_cut.size() != 1) continue;  // leaf blocks only
        int z = in_cut[0];
        bool v0_inside = false;
        for (int v : bv)
            if (v == g.root() && v != z) v0_inside = true;
        if (v0_inside) continue;
        Configuration c{ConfigKind::PendantBlock, {}};
        c.roles.emplace_back("z", z);
        for (size_t i = 0; i < bv.size(); ++i)
            c.roles.emplace_back("b" + std::to_string(i), bv[i]);
        out.push_back(std::move(c));
    }
    sort_configs(out);
    return out;
}

std::vector<Configuration> find_low_degree_vertices(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (v != g.root() && g.degree(v) <= 2)
            out.push_back({ConfigKind::LowDegreeVertex, {{"v", v}}});
    return out;
}

std::vector<Configuration> find_adjacent_threes(const PlaneGraph& g) {
    std::vector<Configuration> out;
    for (const auto& e : g.edges()) {
        auto [u, v] = e;
        if (u == g.root() || v == g.root()) continue;
        if (g.degree(u) == 3 && g.degree(v) == 3)
            out.push_back({ConfigKind::AdjacentThrees, {{"u", u}, {"v", v}}});
    }
    return out;
}

std::vector<Configuration> find_chain_pendant_threes(const PlaneGraph& g) {
    std::vector<Configuration> out;
    ChainWalker walker(g);
    for (int fid : find_minor_triangles(g)) {
        auto vs = g.face(fid).vertex_set();
        int w0 = -1;
        std::vector<int> fours;
        for (int v : vs)
            (g.degree(v) == 3 ? (void)(w0 = v) : (void)fours.push_back(v));
        for (int pick = 0; pick < 2; ++pick) {
            int w1 = fours[pick], u0 = fours[1 - pick];
            walker.walk(vs, w1, [&](const TriangleChain& c, bool) {
                int end = c.w.back();
                std::vector<int> X = {w0, u0};
                X.insert(X.end(), c.w.begin(), c.w.end());
                X.insert(X.end(), c.u.begin(), c.u.end());
                for (int x : g.neighbors(end)) {
                    if (g.degree(x) != 3 || x == g.root()) continue;
                    if (std::find(X.begin(), X.end(), x) != X.end()) continue;
                    std::vector<int> w_full = {w0};
                    w_full.insert(w_full.end(), c.w.begin(), c.w.end());
                    std::vector<int> u_full = {u0};
                    u_full.insert(u_full.end(), c.u.begin(), c.u.end());
                    auto edges = chain_edges(w_full, u_full);
                    edges.insert({std::min(end, x), std::max(end, x)});
                    std::vector<int> all = X;
                    all.push_back(x);
                    if (!all_distinct(all)) continue;
                    if (!internal_edges_exactly(g, all, edges)) continue;
                    Configuration cfg{ConfigKind::ChainPendantThree, {}};
                    for (size_t i = 0; i < w_full.size(); ++i)
                        cfg.roles.emplace_back("w" + std::to_string(i), w_full[i]);
                    for (size_t i = 0; i < u_full.size(); ++i)
                        cfg.roles.emplace_back("u" + std::to_string(i), u_full[i]);
                    cfg.roles.emplace_back("x", x);
                    out.push_back(std::move(cfg));
                }
            });
        }
    }
    sort_configs(out);
    return out;
}

std::vector<Configuration> find_chain_two_minor_triangles(const PlaneGraph& g) {
    std::vector<Configuration> out;
    ChainWalker walker(g);
    auto minors = find_minor_triangles(g);
    for (int fid : minors) {
        auto vs = g.face(fid).vertex_set();
        int w0 = -1;
        std::vector<int> fours;
        for (int v : vs)
            (g.degree(v) == 3 ? (void)(w0 = v) : (void)fours.push_back(v));
        for (int pick = 0; pick < 2; ++pick) {
            int w1 = fours[pick], u0 = fours[1 - pick];
            walker.walk(vs, w1, [&](const TriangleChain& c, bool) {
                int end = c.w.back();
                std::vector<int> X = {w0, u0};
                X.insert(X.end(), c.w.begin(), c.w.end());
                X.insert(X.end(), c.u.begin(), c.u.end());
                for (int y : g.neighbors(end)) {
                    if (g.degree(y) != 4 || y == g.root()) continue;
                    if (std::find(X.begin(), X.end(), y) != X.end()) continue;
                    for (int f2 : minors) {
                        if (f2 == fid) continue;
                        auto t2 = g.face(f2).vertex_set();
                        if (std::find(t2.begin(), t2.end(), y) == t2.end()) continue;
                        int x = -1, z = -1;
                        for (int v : t2) {
                            if (g.degree(v) == 3) x = v;
                            else if (v != y) z = v;
                        }
                        if (x < 0 || z < 0) continue;
                        std::vector<int> all = X;
                        all.push_back(x);
                        all.push_back(y);
                        all.push_back(z);
                        if (!all_distinct(all)) continue;
                        std::vector<int> w_full = {w0};
                        w_full.insert(w_full.end(), c.w.begin(), c.w.end());
                        std::vector<int> u_full = {u0};
                        u_full.insert(u_full.end(), c.u.begin(), c.u.end());
                        auto edges = chain_edges(w_full, u_full);
                        auto add = [&](int a, int b) {
                            edges.insert({std::min(a, b), std::max(a, b)});
                        };
                        add(end, y);
                        add(x, y);
                        add(y, z);
                        add(x, z);
                        if (!internal_edges_exactly(g, all, edges)) continue;
                        Configuration cfg{ConfigKind::ChainTwoMinorTriangles, {}};
                        for (size_t i = 0; i < w_full.size(); ++i)
                            cfg.roles.emplace_back("w" + std::to_string(i), w_full[i]);
                        for (size_t i = 0; i < u_full.size(); ++i)
                            cfg.roles.emplace_back("u" + std::to_string(i), u_full[i]);
                        cfg.roles.emplace_back("x", x);
                        cfg.roles.emplace_back("y", y);
                        cfg.roles.emplace_back("z", z);
                        out.push_back(std::move(cfg));
                    }
                }
            });
        }
    }
    sort_configs(out);
    return out;
}

std::vector<Configuration> find_suns(const PlaneGraph& g) {
    std::vector<Configuration> out;
    std::set<std::vector<int>> seen;
    auto tri_faces = triangle_faces_of(g);
    for (const auto& f : g.faces()) {
        if (f.degree() != 6) continue;
        auto walk = f.walk_vertices();
        if (f.vertex_set().size() != 6) continue;
        for (int dir : {1, -1})
            for (int s = 0; s < 6; ++s) {
                std::vector<int> v(7, 0);  // v[1..6]
                for (int i = 0; i < 6; ++i) v[i + 1] = walk[((s + dir * i) % 6 + 6) % 6];
                if (g.degree(v[1]) != 3) continue;
                bool deg_ok = true;
                for (int i = 2; i <= 6; ++i) deg_ok &= g.degree(v[i]) == 4;
                if (!deg_ok) continue;
                std::vector<int> u(6, -1);  // u[1..5]
                bool tri_ok = true;
                for (int i = 1; i <= 5 && tri_ok; ++i) {
                    // the face on the other side of edge v_i v_{i+1}
                    int other = g.face_at(v[i + 1], v[i]) == f.id ? g.face_at(v[i], v[i + 1])
                                                                  : g.face_at(v[i + 1], v[i]);
                    const Face& tf = g.face(other);
                    if (tf.degree() != 3 || tf.id == f.id) {
                        tri_ok = false;
                        break;
                    }
                    auto ts = tf.vertex_set();
                    std::array<int, 3> key{ts[0], ts[1], ts[2]};
                    if (!tri_faces.count(key)) {
                        tri_ok = false;
                        break;
                    }
                    int apex = -1;
                    for (int t : ts)
                        if (t != v[i] && t != v[i + 1]) apex = t;
                    if (apex < 0 || g.degree(apex) != 4 || apex == g.root()) {
                        tri_ok = false;
                        break;
                    }
                    u[i] = apex;
                }
                if (!tri_ok) continue;
                bool root_free = true;
                for (int i = 1; i <= 6; ++i) root_free &= v[i] != g.root();
                if (!root_free) continue;
                std::vector<int> all(v.begin() + 1, v.end());
                all.insert(all.end(), u.begin() + 1, u.end());
                if (!all_distinct(all)) continue;
                std::set<std::pair<int, int>> edges;
                auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
                for (int i = 1; i <= 5; ++i) add(v[i], v[i + 1]);
                add(v[6], v[1]);
                for (int i = 1; i <= 5; ++i) {
                    add(v[i], u[i]);
                    add(v[i + 1], u[i]);
                }
                if (!internal_edges_exactly(g, all, edges)) continue;
                std::vector<int> sig = all;
                std::sort(sig.begin(), sig.end());
                sig.push_back(v[1]);  // suns differ if the 3-vertex differs
                if (!seen.insert(sig).second) continue;
                Configuration cfg{ConfigKind::Sun, {}};
                for (int i = 1; i <= 6; ++i) cfg.roles.emplace_back("v" + std::to_string(i), v[i]);
                for (int i = 1; i <= 5; ++i) cfg.roles.emplace_back("u" + std::to_string(i), u[i]);
                out.push_back(std::move(cfg));
            }
    }
    sort_configs(out);
    return out;
}

std::vector<Configuration> find_special_five_cycles(const PlaneGraph& g) {
    std::vector<Configuration> out;
    std::set<std::vector<int>> seen;
    const int n = g.vertex_count();
    // enumerate 5-cycles anchored at their minimum vertex
    std::vector<char> used(n, 0);
    std::vector<int> path;
    auto consider = [&](const std::vector<int>& cyc) {
        for (int dir : {1, -1})
            for (int s = 0; s < 5; ++s) {
                std::vector<int> u(7, -1);  // u[1..6]
                for (int i = 0; i < 5; ++i) u[i + 1] = cyc[((s + dir * i) % 5 + 5) % 5];
                if (g.degree(u[1]) != 3 || g.degree(u[3]) != 3) continue;
                if (g.degree(u[2]) != 4 || g.degree(u[4]) != 4 || g.degree(u[5]) != 4) continue;
                for (int cand : g.neighbors(u[1])) {
                    if (cand == u[2] || cand == u[5]) continue;
                    if (!g.adjacent(cand, u[5])) continue;
                    if (g.degree(cand) != 4 || cand == g.root()) continue;
                    u[6] = cand;
                    std::vector<int> all(u.begin() + 1, u.end());
                    bool root_free = true;
                    for (int v : all) root_free &= v != g.root();
                    if (!root_free || !all_distinct(all)) continue;
                    std::set<std::pair<int, int>> edges;
                    auto add = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
                    for (int i = 1; i <= 4; ++i) add(u[i], u[i + 1]);
                    add(u[5], u[1]);
                    add(u[1], u[6]);
                    add(u[5], u[6]);
                    if (!internal_edges_exactly(g, all, edges)) continue;
                    std::vector<int> sig = {u[1], u[2], u[3], u[4], u[5], u[6]};
                    if (!seen.insert(sig).second) continue;
                    Configuration cfg{ConfigKind::SpecialFiveCycle, {}};
                    for (int i = 1; i <= 6; ++i)
                        cfg.roles.emplace_back("u" + std::to_string(i), u[i]);
                    out.push_back(std::move(cfg));
                }
            }
    };
    auto dfs = [&](auto&& self, int s, int v) -> void {
        if (static_cast<int>(path.size()) == 5) {
            if (g.adjacent(v, s)) consider(path);
            return;
        }
        for (int w : g.neighbors(v)) {
            if (w <= s || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, s, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        path.assign(1, s);
        dfs(dfs, s, s);
        used[s] = 0;
    }
    sort_configs(out);
    return out;
}

std::vector<Configuration> find_all(const PlaneGraph& g, ConfigKind kind) {
    switch (kind) {
        case ConfigKind::PendantBlock: return find_pendant_blocks(g);
        case ConfigKind::LowDegreeVertex: return find_low_degree_vertices(g);
        case ConfigKind::AdjacentThrees: return find_adjacent_threes(g);
        case ConfigKind::ChainPendantThree: return find_chain_pendant_threes(g);
        case ConfigKind::ChainTwoMinorTriangles: return find_chain_two_minor_triangles(g);
        case ConfigKind::Sun: return find_suns(g);
        case ConfigKind::SpecialFiveCycle: return find_special_five_cycles(g);
    }
    throw Error("find_all: bad kind");
}

std::optional<Configuration> detect(const PlaneGraph& g, int l) {
    if (!g.in_class(l)) throw NotInClass("detect: graph is not in P_{4," + std::to_string(l) + "}");
    std::vector<ConfigKind> order = {ConfigKind::PendantBlock, ConfigKind::LowDegreeVertex,
                                     ConfigKind::AdjacentThrees};
    if (l == 5 || l == 7) {
        order.push_back(ConfigKind::ChainPendantThree);
        order.push_back(ConfigKind::ChainTwoMinorTriangles);
    }
    if (l == 5) order.push_back(ConfigKind::Sun);
    if (l == 7) order.push_back(ConfigKind::SpecialFiveCycle);
    for (ConfigKind k : order) {
        auto found = find_all(g, k);
        if (!found.empty()) return found.front();
    }
    return std::nullopt;
}

bool validate_configuration(const PlaneGraph& g, const Configuration& cfg) {
    // Membership in the exhaustive finder output is the from-scratch recheck.
    auto all = find_all(g, cfg.kind);
    for (const auto& c : all)
        if (c.roles == cfg.roles) return true;
    return false;
}

}  // namespace atcert
