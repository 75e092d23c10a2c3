#include "atcert/reducer.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "atcert/errors.hpp"

namespace atcert {

namespace {

constexpr int kBaseThreshold = 6;

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::string edge_list_str(const std::vector<std::pair<int, int>>& es) {
    std::ostringstream os;
    for (const auto& e : es) os << e.first << "-" << e.second << " ";
    return os.str();
}

// All matchings of g avoiding the root, in exclude-first DFS order over edge
// ids (the empty matching first), passed to sink until it returns true.
bool for_each_valid_matching(const PlaneGraph& g,
                             const std::function<bool(const Matching&)>& sink) {
    const auto& edges = g.edges();
    std::vector<char> covered(g.vertex_count(), 0);
    Matching cur;
    auto rec = [&](auto&& self, size_t j) -> bool {
        if (j == edges.size()) return sink(cur);
        if (self(self, j + 1)) return true;
        auto [u, v] = edges[j];
        if (u == g.root() || v == g.root() || covered[u] || covered[v]) return false;
        covered[u] = covered[v] = 1;
        cur.push_back(edges[j]);
        bool done = self(self, j + 1);
        cur.pop_back();
        covered[u] = covered[v] = 0;
        return done;
    };
    return rec(rec, 0);
}

Certificate base_bruteforce(const PlaneGraph& g, const Caps& caps, bool absent_fallback) {
    std::optional<Certificate> found;
    for_each_valid_matching(g, [&](const Matching& m) {
        std::set<std::pair<int, int>> drop(m.begin(), m.end());
        std::vector<std::pair<int, int>> rest;
        for (const auto& e : g.edges())
            if (!drop.count(e)) rest.push_back(e);
        auto d = find_good_orientation(g.vertex_count(), rest, g.root(), caps);
        if (!d) return false;
        TraceNode base;
        base.type = TraceNode::Type::Base;
        base.absent_fallback = absent_fallback;
        for (int v = 0; v < g.vertex_count(); ++v) base.vertices.push_back(v);
        Matching sorted = m;
        std::sort(sorted.begin(), sorted.end());
        found = Certificate{std::move(sorted), *d, std::move(base)};
        return true;
    });
    if (!found)
        throw TheoremViolation(
            "no valid matching with a good orientation exists on a class member with " +
            std::to_string(g.vertex_count()) + " vertices");
    return *found;
}

void translate(std::vector<std::pair<int, int>>& pairs, const std::vector<int>& map) {
    for (auto& p : pairs) p = {map[p.first], map[p.second]};
}

void translate_trace(TraceNode& t, const std::vector<int>& map) {
    for (int& v : t.vertices) v = map[v];
    for (int& v : t.removed) v = map[v];
    for (int& v : t.block) v = map[v];
    if (t.z >= 0) t.z = map[t.z];
    translate(t.matching_added, map);
    translate(t.arcs_added, map);
    translate(t.cut_arcs, map);
    if (t.config) {
        for (auto& r : t.config->roles) r.second = map[r.second];
    }
    for (auto& c : t.children) translate_trace(c, map);
}

Certificate extract_rec(const PlaneGraph& g, int l, const Caps& caps);

Certificate extract_connected(const PlaneGraph& g, int l, const Caps& caps) {
    if (g.vertex_count() <= kBaseThreshold) return base_bruteforce(g, caps, false);

    auto cfg = detect(g, l);
    if (!cfg) return base_bruteforce(g, caps, true);

    if (cfg->kind == ConfigKind::PendantBlock) {
        ReduceStep step = reduce_step_data(g, *cfg);
        // (B, z) and (G - (B - z), v0), joined at the cut vertex z.
        std::vector<int> rest;
        std::set<int> binterior(step.block.begin(), step.block.end());
        binterior.erase(step.z);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!binterior.count(v)) rest.push_back(v);

        std::vector<int> map1, map2;
        PlaneGraph g1 = g.induced(rest, g.root(), &map1);
        PlaneGraph g2 = g.induced(step.block, step.z, &map2);
        Certificate c1 = extract_rec(g1, l, caps);
        Certificate c2 = extract_rec(g2, l, caps);
        translate(c1.matching, map1);
        translate(c1.orientation.arcs, map1);
        translate_trace(c1.trace, map1);
        translate(c2.matching, map2);
        translate(c2.orientation.arcs, map2);
        translate_trace(c2.trace, map2);

        Certificate out;
        out.matching = c1.matching;
        out.matching.insert(out.matching.end(), c2.matching.begin(), c2.matching.end());
        std::sort(out.matching.begin(), out.matching.end());
        out.orientation.n = g.vertex_count();
        out.orientation.arcs = c1.orientation.arcs;
        out.orientation.arcs.insert(out.orientation.arcs.end(), c2.orientation.arcs.begin(),
                                    c2.orientation.arcs.end());
        TraceNode t;
        t.type = TraceNode::Type::Split;
        for (int v = 0; v < g.vertex_count(); ++v) t.vertices.push_back(v);
        t.config = *cfg;
        t.block = step.block;
        t.z = step.z;
        t.children.push_back(std::move(c1.trace));
        t.children.push_back(std::move(c2.trace));
        out.trace = std::move(t);
        return out;
    }

    ReduceStep step = reduce_step_data(g, *cfg);
    std::vector<int> map;
    PlaneGraph reduced = g.delete_vertices(step.removed, &map);
    Certificate child = extract_rec(reduced, l, caps);
    return lift_reduction(g, *cfg, child, map);
}

Certificate extract_rec(const PlaneGraph& g, int l, const Caps& caps) {
    if (g.component_count() == 1) return extract_connected(g, l, caps);

    // diff multiplies over components (empty one-way cut), so certificates
    // union cleanly; v0's component keeps v0, the others use their smallest
    // vertex as local root.
    Certificate out;
    out.orientation.n = g.vertex_count();
    TraceNode t;
    t.type = TraceNode::Type::Components;
    for (int v = 0; v < g.vertex_count(); ++v) t.vertices.push_back(v);
    for (int c = 0; c < g.component_count(); ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.component_of(v) == c) keep.push_back(v);
        int local_root = g.component_of(g.root()) == c ? g.root() : keep.front();
        std::vector<int> map;
        PlaneGraph sub = g.induced(keep, local_root, &map);
        Certificate part = extract_rec(sub, l, caps);
        translate(part.matching, map);
        translate(part.orientation.arcs, map);
        translate_trace(part.trace, map);
        out.matching.insert(out.matching.end(), part.matching.begin(), part.matching.end());
        out.orientation.arcs.insert(out.orientation.arcs.end(), part.orientation.arcs.begin(),
                                    part.orientation.arcs.end());
        t.children.push_back(std::move(part.trace));
    }
    std::sort(out.matching.begin(), out.matching.end());
    out.trace = std::move(t);
    return out;
}

}  // namespace

ReduceStep reduce_step_data(const PlaneGraph& g, const Configuration& cfg) {
    if (!validate_configuration(g, cfg))
        throw ConfigurationStale("configuration does not match the graph");
    ReduceStep s;
    s.kind = cfg.kind;
    switch (cfg.kind) {
        case ConfigKind::PendantBlock: {
            s.block = cfg.roles_prefixed('b');
            s.z = cfg.role("z");
            break;
        }
        case ConfigKind::LowDegreeVertex: {
            s.removed = {cfg.role("v")};
            break;
        }
        case ConfigKind::AdjacentThrees: {
            int u = cfg.role("u"), v = cfg.role("v");
            s.removed = {u, v};
            s.matching_added = {norm_edge(u, v)};
            break;
        }
        case ConfigKind::ChainPendantThree: {
            auto w = cfg.roles_prefixed('w');
            auto u = cfg.roles_prefixed('u');
            int x = cfg.role("x");
            s.removed = w;
            s.removed.insert(s.removed.end(), u.begin(), u.end());
            s.removed.push_back(x);
            for (size_t i = 0; i < u.size(); ++i)
                s.matching_added.push_back(norm_edge(w[i], u[i]));
            s.matching_added.push_back(norm_edge(w.back(), x));
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                s.arcs_added.emplace_back(w[i], w[i + 1]);
                s.arcs_added.emplace_back(w[i + 1], u[i]);
            }
            break;
        }
        case ConfigKind::ChainTwoMinorTriangles: {
            auto w = cfg.roles_prefixed('w');
            auto u = cfg.roles_prefixed('u');
            int x = cfg.role("x"), y = cfg.role("y"), z = cfg.role("z");
            s.removed = w;
            s.removed.insert(s.removed.end(), u.begin(), u.end());
            s.removed.push_back(x);
            s.removed.push_back(y);
            s.removed.push_back(z);
            for (size_t i = 0; i < u.size(); ++i)
                s.matching_added.push_back(norm_edge(w[i], u[i]));
            s.matching_added.push_back(norm_edge(w.back(), y));
            s.matching_added.push_back(norm_edge(x, z));
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                s.arcs_added.emplace_back(w[i], w[i + 1]);
                s.arcs_added.emplace_back(w[i + 1], u[i]);
            }
            s.arcs_added.emplace_back(x, y);
            s.arcs_added.emplace_back(y, z);
            break;
        }
        case ConfigKind::Sun: {
            std::vector<int> v(7), u(6);
            for (int i = 1; i <= 6; ++i) v[i] = cfg.role("v" + std::to_string(i));
            for (int i = 1; i <= 5; ++i) u[i] = cfg.role("u" + std::to_string(i));
            for (int i = 1; i <= 6; ++i) s.removed.push_back(v[i]);
            for (int i = 1; i <= 5; ++i) s.removed.push_back(u[i]);
            for (int i = 1; i <= 5; ++i) s.matching_added.push_back(norm_edge(v[i], u[i]));
            s.arcs_added.emplace_back(v[1], v[6]);
            for (int i = 1; i <= 5; ++i) {
                s.arcs_added.emplace_back(v[i], v[i + 1]);
                s.arcs_added.emplace_back(v[i + 1], u[i]);
            }
            break;
        }
        case ConfigKind::SpecialFiveCycle: {
            std::vector<int> u(7);
            for (int i = 1; i <= 6; ++i) u[i] = cfg.role("u" + std::to_string(i));
            for (int i = 1; i <= 6; ++i) s.removed.push_back(u[i]);
            s.matching_added = {norm_edge(u[1], u[2]), norm_edge(u[3], u[4]),
                                norm_edge(u[5], u[6])};
            s.arcs_added = {{u[1], u[6]}, {u[1], u[5]}, {u[5], u[4]}, {u[3], u[2]}};
            break;
        }
    }
    std::sort(s.removed.begin(), s.removed.end());
    std::sort(s.matching_added.begin(), s.matching_added.end());
    return s;
}

Certificate lift_reduction(const PlaneGraph& g, const Configuration& cfg,
                           const Certificate& child_in, const std::vector<int>& new_to_old) {
    if (cfg.kind == ConfigKind::PendantBlock)
        throw Error("lift_reduction does not handle block splits");
    ReduceStep step = reduce_step_data(g, cfg);
    Certificate child = child_in;
    translate(child.matching, new_to_old);
    translate(child.orientation.arcs, new_to_old);
    translate_trace(child.trace, new_to_old);

    // Cut arcs X -> rest, in ascending X order then rotation order.
    std::set<int> xset(step.removed.begin(), step.removed.end());
    std::vector<std::pair<int, int>> cut;
    for (int x : step.removed)
        for (int u : g.neighbors(x))
            if (!xset.count(u)) cut.emplace_back(x, u);

    Certificate out;
    out.matching = child.matching;
    out.matching.insert(out.matching.end(), step.matching_added.begin(),
                        step.matching_added.end());
    std::sort(out.matching.begin(), out.matching.end());
    out.orientation.n = g.vertex_count();
    out.orientation.arcs = child.orientation.arcs;
    out.orientation.arcs.insert(out.orientation.arcs.end(), step.arcs_added.begin(),
                                step.arcs_added.end());
    out.orientation.arcs.insert(out.orientation.arcs.end(), cut.begin(), cut.end());

    TraceNode t;
    t.type = TraceNode::Type::Reduce;
    for (int v = 0; v < g.vertex_count(); ++v) t.vertices.push_back(v);
    t.config = cfg;
    t.removed = step.removed;
    t.matching_added = step.matching_added;
    t.arcs_added = step.arcs_added;
    t.cut_arcs = cut;
    t.children.push_back(std::move(child.trace));
    out.trace = std::move(t);
    return out;
}

std::pair<PlaneGraph, ReduceStep> reduce_step(const PlaneGraph& g, const Configuration& cfg) {
    ReduceStep s = reduce_step_data(g, cfg);
    if (cfg.kind == ConfigKind::PendantBlock) {
        std::vector<int> rest;
        std::set<int> binterior(s.block.begin(), s.block.end());
        binterior.erase(s.z);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!binterior.count(v)) rest.push_back(v);
        return {g.induced(rest, g.root()), std::move(s)};
    }
    return {g.delete_vertices(s.removed), std::move(s)};
}

Certificate extract(const PlaneGraph& g, int l, const Caps& caps) {
    if (!g.in_class(l))
        throw NotInClass("extract: graph is not in P_{4," + std::to_string(l) + "}");
    return extract_rec(g, l, caps);
}

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

// One-way-cut factorization along the trace: each step must leave an acyclic
// removed part with all cut arcs pointing out, so diff factors region by
// region until every leaf is small enough to enumerate.
bool verify_trace(const PlaneGraph& g, const Orientation& d, const TraceNode& t,
                  const std::vector<int>& region, const Caps& caps, std::string& err) {
    std::vector<char> in_region(g.vertex_count(), 0);
    for (int v : region) in_region[v] = 1;
    {
        std::vector<int> tv = t.vertices;
        std::sort(tv.begin(), tv.end());
        std::vector<int> rv = region;
        std::sort(rv.begin(), rv.end());
        if (tv != rv) {
            err = "trace region mismatch";
            return false;
        }
    }
    switch (t.type) {
        case TraceNode::Type::Base: {
            std::vector<std::pair<int, int>> sub = induced_arcs(d.arcs, in_region);
            if (static_cast<int>(sub.size()) > caps.diff_edge_cap) {
                err = "base region too large to enumerate";
                return false;
            }
            if (diff(Orientation{g.vertex_count(), sub}, caps) == 0) {
                err = "base region diff is zero";
                return false;
            }
            return true;
        }
        case TraceNode::Type::Reduce: {
            std::vector<char> in_x(g.vertex_count(), 0);
            for (int v : t.removed) {
                if (!in_region[v]) {
                    err = "removed set leaves the region";
                    return false;
                }
                in_x[v] = 1;
            }
            auto dx = induced_arcs(d.arcs, in_x);
            if (!arcs_acyclic(g.vertex_count(), dx)) {
                err = "internal arcs of a reduction are not acyclic";
                return false;
            }
            for (const auto& a : d.arcs) {
                bool tf = in_region[a.first] && in_x[a.first];
                bool hf = in_region[a.second] && in_x[a.second];
                bool tr = in_region[a.first] && !in_x[a.first];
                bool hr = in_region[a.second] && !in_x[a.second];
                if (hf && tr) {
                    err = "arc enters the removed set from the rest";
                    return false;
                }
                (void)tf;
                (void)hr;
            }
            std::vector<int> rest;
            for (int v : region)
                if (!in_x[v]) rest.push_back(v);
            if (t.children.size() != 1) {
                err = "reduce node must have one child";
                return false;
            }
            return verify_trace(g, d, t.children[0], rest, caps, err);
        }
        case TraceNode::Type::Split: {
            if (t.children.size() != 2) {
                err = "split node must have two children";
                return false;
            }
            std::vector<char> in_b(g.vertex_count(), 0);
            for (int v : t.block) {
                if (!in_region[v]) {
                    err = "block leaves the region";
                    return false;
                }
                in_b[v] = 1;
            }
            if (t.z < 0 || !in_b[t.z]) {
                err = "split cut vertex not in block";
                return false;
            }
            // arcs between B - z and the rest must not exist except at z,
            // and arcs at z inside B must point into z
            for (const auto& a : d.arcs) {
                if (!in_region[a.first] || !in_region[a.second]) continue;
                bool tb = in_b[a.first] && a.first != t.z;
                bool hb = in_b[a.second] && a.second != t.z;
                if (tb != hb) {
                    int other = tb ? a.second : a.first;
                    if (other != t.z) {
                        err = "edge crosses the block cut away from z";
                        return false;
                    }
                    if (a.first == t.z) {
                        err = "arc leaves z into the block interior";
                        return false;
                    }
                }
            }
            std::vector<int> rest;
            for (int v : region)
                if (!in_b[v] || v == t.z) rest.push_back(v);
            std::vector<int> bl = t.block;
            return verify_trace(g, d, t.children[0], rest, caps, err) &&
                   verify_trace(g, d, t.children[1], bl, caps, err);
        }
        case TraceNode::Type::Components: {
            std::vector<char> seen(g.vertex_count(), 0);
            for (const auto& child : t.children) {
                std::vector<char> in_c(g.vertex_count(), 0);
                for (int v : child.vertices) {
                    if (!in_region[v] || seen[v]) {
                        err = "component regions overlap or escape";
                        return false;
                    }
                    in_c[v] = seen[v] = 1;
                }
                for (const auto& a : d.arcs)
                    if (in_region[a.first] && in_region[a.second] &&
                        in_c[a.first] != in_c[a.second]) {
                        err = "arc crosses a component boundary";
                        return false;
                    }
            }
            for (int v : region)
                if (!seen[v]) {
                    err = "component regions do not cover";
                    return false;
                }
            for (const auto& child : t.children) {
                std::vector<int> cv = child.vertices;
                if (!verify_trace(g, d, child, cv, caps, err)) return false;
            }
            return true;
        }
    }
    err = "unknown trace node";
    return false;
}

}  // namespace

VerifyReport verify_certificate(const PlaneGraph& g, const Certificate& cert, const Caps& caps) {
    VerifyReport rep;

    // (a) matching: edges exist, disjoint, root uncovered
    {
        bool ok = true;
        std::string wit;
        std::vector<int> cover(g.vertex_count(), 0);
        for (const auto& e : cert.matching) {
            if (!g.adjacent(e.first, e.second)) {
                ok = false;
                wit = "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                      " not in graph";
                break;
            }
            if (++cover[e.first] > 1 || ++cover[e.second] > 1) {
                ok = false;
                wit = "matching covers a vertex twice";
                break;
            }
        }
        if (ok && cover[g.root()] > 0) {
            ok = false;
            wit = "matching covers the root";
        }
        rep.checks.push_back({"matching_valid", ok, wit});
    }

    // (b) orientation base = G - M
    {
        bool ok = cert.orientation.n == g.vertex_count();
        std::string wit = ok ? "" : "vertex count mismatch";
        std::set<std::pair<int, int>> m(cert.matching.begin(), cert.matching.end());
        std::vector<std::pair<int, int>> want;
        for (const auto& e : g.edges())
            if (!m.count(e)) want.push_back(e);
        auto got = cert.orientation.base_edges();
        if (ok && got != want) {
            ok = false;
            wit = "orientation base is not E(G) - M (got " + edge_list_str(got) + "; want " +
                  edge_list_str(want) + ")";
        }
        rep.checks.push_back({"orientation_base", ok, wit});
    }

    // (c) out-degree caps
    {
        bool ok = cert.orientation.max_out_degree() <= 2 &&
                  cert.orientation.out_degree(g.root()) == 0;
        std::string wit;
        if (!ok)
            wit = "max out-degree " + std::to_string(cert.orientation.max_out_degree()) +
                  ", d+(v0) = " + std::to_string(cert.orientation.out_degree(g.root()));
        rep.checks.push_back({"degree_caps", ok, wit});
    }

    // (d) diff != 0
    {
        bool ok;
        std::string wit;
        if (static_cast<int>(cert.orientation.arcs.size()) <= caps.diff_edge_cap) {
            BigInt v = diff(cert.orientation, caps);
            rep.diff_value = v.str();
            ok = v != 0;
            if (!ok) wit = "diff = 0 by full enumeration";
        } else {
            rep.used_trace_factorization = true;
            std::vector<int> all;
            for (int v = 0; v < g.vertex_count(); ++v) all.push_back(v);
            std::string err;
            ok = verify_trace(g, cert.orientation, cert.trace, all, caps, err);
            if (!ok) wit = "trace factorization failed: " + err;
        }
        rep.checks.push_back({"diff_nonzero", ok, wit});
    }

    return rep;
}

}  // namespace atcert
