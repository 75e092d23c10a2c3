#include "atcert/genlab.hpp"

#include <algorithm>
#include <set>

#include "atcert/errors.hpp"

namespace atcert {

namespace {

// Traversal encoding from one starting dart and sense. Vertices are labeled
// in discovery order; each vertex contributes its degree and its rotation
// (started at the discovery edge) as labels.
std::vector<int> encode_from(const std::vector<std::vector<int>>& rot, int u0, int j0, int sense) {
    const int n = static_cast<int>(rot.size());
    std::vector<int> label(n, -1), entry(n, 0), order;
    order.reserve(n);
    label[u0] = 0;
    entry[u0] = j0;
    order.push_back(u0);
    int next = 1;
    std::vector<int> enc;
    for (size_t idx = 0; idx < order.size(); ++idx) {
        int w = order[idx];
        const auto& r = rot[w];
        const int d = static_cast<int>(r.size());
        enc.push_back(d);
        for (int t = 0; t < d; ++t) {
            int pos = sense > 0 ? (entry[w] + t) % d : ((entry[w] - t) % d + d) % d;
            int x = r[pos];
            if (label[x] < 0) {
                label[x] = next++;
                entry[x] = static_cast<int>(std::find(rot[x].begin(), rot[x].end(), w) -
                                            rot[x].begin());
                order.push_back(x);
            }
            enc.push_back(label[x]);
        }
    }
    return enc;
}

}  // namespace

std::vector<int> embedded_canonical_key(const std::vector<std::vector<int>>& rot) {
    const int n = static_cast<int>(rot.size());
    bool any_edge = false;
    for (const auto& r : rot) any_edge |= !r.empty();
    if (!any_edge) return {n};  // connected and edgeless: K1
    std::vector<int> best;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < static_cast<int>(rot[v].size()); ++j)
            for (int sense : {1, -1}) {
                auto enc = encode_from(rot, v, j, sense);
                if (best.empty() || enc < best) best = std::move(enc);
            }
    return best;
}

namespace {

struct Attachment {
    std::vector<int> positions;  // corner positions in the face walk, ascending
};

// All ways to attach a new vertex inside face f of parent: a nonempty corner
// subset with distinct corner vertices, pruned so no two chosen vertices have
// a common neighbor (that would close a 4-cycle through the new vertex).
void collect_attachments(const PlaneGraph& parent, const Face& f,
                         std::vector<Attachment>& out) {
    const int L = f.degree();
    if (L == 0) {  // isolated-vertex component cannot occur (parents connected, n >= 1)
        return;
    }
    std::vector<int> tails(L);
    for (int i = 0; i < L; ++i) tails[i] = f.walk[i].first;

    std::vector<int> chosen;
    auto conflict = [&](int a, int b) {
        if (a == b) return true;
        // common neighbor check
        for (int x : parent.neighbors(a))
            if (x != b && parent.adjacent(b, x)) return true;
        return false;
    };
    auto dfs = [&](auto&& self, int i) -> void {
        if (i == L) {
            if (!chosen.empty()) out.push_back({chosen});
            return;
        }
        self(self, i + 1);
        int v = tails[i];
        for (int p : chosen)
            if (conflict(tails[p], v)) return;
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
    };
    dfs(dfs, 0);
}

// Insert a new vertex inside face f, joined to the chosen corners.
// At corner i (darts (a_{i-1} -> a_i), (a_i -> b_i)) the new edge goes into
// a_i's rotation between b_i and a_{i-1}; the new vertex's own rotation is
// the corners in walk order.
std::vector<std::vector<int>> attach_vertex(const PlaneGraph& parent, const Face& f,
                                            const std::vector<int>& positions) {
    std::vector<std::vector<int>> rot = parent.rotation();
    const int x = static_cast<int>(rot.size());
    const int L = f.degree();
    for (int i : positions) {
        int v = f.walk[i].first;
        int prev_tail = f.walk[(i + L - 1) % L].first;
        // insert before the arrival edge (v, prev_tail)
        auto& r = rot[v];
        auto it = std::find(r.begin(), r.end(), prev_tail);
        r.insert(it, x);
    }
    std::vector<int> xr;
    for (int i : positions) xr.push_back(f.walk[i].first);
    rot.push_back(std::move(xr));
    return rot;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> enumerate_embedded_reps(const GeneratorSpec& spec) {
    if (spec.max_vertices < 1) throw Error("enumerate: max_vertices must be >= 1");
    if (spec.l != 5 && spec.l != 6 && spec.l != 7) throw Error("enumerate: l must be 5, 6 or 7");

    std::vector<std::vector<std::vector<int>>> reps;  // all accepted, every size
    std::vector<std::vector<std::vector<int>>> level = {{{}}};  // K1
    reps.push_back(level.front());

    for (int n = 2; n <= spec.max_vertices; ++n) {
        std::set<std::vector<int>> seen;
        std::vector<std::vector<std::vector<int>>> next_level;
        for (const auto& parent_rot : level) {
            PlaneGraph parent = PlaneGraphInternal::build_any(parent_rot, 0);
            for (const Face& f : parent.faces()) {
                std::vector<Attachment> atts;
                if (f.degree() == 0 && parent.vertex_count() == 1) {
                    atts.push_back({{}});  // K1 -> K2 special case below
                } else {
                    collect_attachments(parent, f, atts);
                }
                for (const auto& att : atts) {
                    std::vector<std::vector<int>> child;
                    if (f.degree() == 0) {
                        child = {{1}, {0}};
                    } else {
                        child = attach_vertex(parent, f, att.positions);
                    }
                    PlaneGraph g = PlaneGraphInternal::build_any(child, 0);
                    if (!g.in_class(spec.l)) continue;
                    auto key = embedded_canonical_key(child);
                    if (seen.insert(std::move(key)).second) next_level.push_back(child);
                }
            }
        }
        for (const auto& r : next_level) reps.push_back(r);
        level = std::move(next_level);
        if (level.empty()) break;
    }

    if (spec.connectivity >= 2) {
        std::vector<std::vector<std::vector<int>>> filtered;
        for (const auto& r : reps) {
            PlaneGraph g = PlaneGraphInternal::build_any(r, 0);
            if (g.blocks().cut_vertices.empty()) filtered.push_back(r);
        }
        return filtered;
    }
    return reps;
}

std::vector<PlaneGraph> rep_instances(const std::vector<std::vector<int>>& rot) {
    std::vector<PlaneGraph> out;
    PlaneGraph base = PlaneGraphInternal::build_any(rot, 0);
    for (const Face& f : base.faces()) {
        for (int r : f.vertex_set()) {
            out.push_back(f.walk.empty()
                              ? PlaneGraphInternal::build_any(rot, r)
                              : PlaneGraphInternal::build_with_outer_dart(rot, r, f.walk.front()));
        }
    }
    return out;
}

void enumerate_class(const GeneratorSpec& spec,
                     const std::function<void(const PlaneGraph&, int)>& sink) {
    auto reps = enumerate_embedded_reps(spec);

    struct Desc {
        int rep;
        Dart dart;   // identifies the outer face; (-1,-1) for K1
        int root;
    };
    std::vector<Desc> descs;
    for (int ri = 0; ri < static_cast<int>(reps.size()); ++ri) {
        PlaneGraph base = PlaneGraphInternal::build_any(reps[ri], 0);
        for (const Face& f : base.faces()) {
            Dart d = f.walk.empty() ? Dart{-1, -1} : f.walk.front();
            for (int r : f.vertex_set()) descs.push_back({ri, d, r});
        }
    }

    std::vector<long long> chosen;
    if (spec.sample > 0 && spec.sample < static_cast<long long>(descs.size())) {
        Rng rng(spec.seed);
        std::vector<long long> idx(descs.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<long long>(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        chosen.assign(idx.begin(), idx.begin() + spec.sample);
        std::sort(chosen.begin(), chosen.end());
    } else {
        chosen.resize(descs.size());
        for (size_t i = 0; i < chosen.size(); ++i) chosen[i] = static_cast<long long>(i);
    }

    for (long long i : chosen) {
        const Desc& d = descs[i];
        PlaneGraph g = d.dart.first < 0
                           ? PlaneGraphInternal::build_any(reps[d.rep], d.root)
                           : PlaneGraphInternal::build_with_outer_dart(reps[d.rep], d.root, d.dart);
        sink(g, d.rep);
    }
}

std::vector<PlaneGraph> enumerate_class_vec(const GeneratorSpec& spec) {
    std::vector<PlaneGraph> out;
    enumerate_class(spec, [&](const PlaneGraph& g, int) { out.push_back(g); });
    return out;
}

std::vector<std::pair<int, int>> random_graph(int n, int num, int den, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> dist(0, den - 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist(rng) < num) edges.emplace_back(u, v);
    return edges;
}

namespace {

bool list_colorable(int n, const std::vector<std::vector<int>>& adj,
                    const std::vector<std::vector<int>>& lists) {
    std::vector<int> color(n, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c : lists[v]) {
            bool ok = true;
            for (int u : adj[v])
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

std::vector<std::vector<int>> k_subsets(int universe, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int c = start; c < universe; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

ChoosableResult brute_force_choosable(int n, const std::vector<std::pair<int, int>>& edges,
                                      int k, bool exhaustive, long long budget,
                                      unsigned long long seed) {
    if (k < 1) throw Error("brute_force_choosable: k must be >= 1");
    if (exhaustive && n > 8) throw TooLarge("brute_force_choosable: exhaustive mode needs |V| <= 8");
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    const int universe = 2 * k - 1;
    auto subsets = k_subsets(universe, k);
    std::vector<std::vector<int>> lists(n);

    if (exhaustive) {
        if (n == 0) return {ChoosableVerdict::Choosable, {}};
        // Any assignment can be recolored so the first vertex's list becomes
        // {0..k-1}; sweeping the rest exhaustively is therefore complete.
        lists[0] = subsets[0];
        std::vector<size_t> idx(n, 0);
        while (true) {
            for (int v = 1; v < n; ++v) lists[v] = subsets[idx[v]];
            if (!list_colorable(n, adj, lists))
                return {ChoosableVerdict::NotChoosable, lists};
            int v = n - 1;
            while (v >= 1) {
                if (++idx[v] < subsets.size()) break;
                idx[v] = 0;
                --v;
            }
            if (v < 1) break;
        }
        return {ChoosableVerdict::Choosable, {}};
    }

    Rng rng(seed);
    std::uniform_int_distribution<size_t> dist(0, subsets.size() - 1);
    for (long long t = 0; t < budget; ++t) {
        for (int v = 0; v < n; ++v) lists[v] = subsets[dist(rng)];
        if (!list_colorable(n, adj, lists)) return {ChoosableVerdict::NotChoosable, lists};
    }
    return {ChoosableVerdict::NoCounterexampleFound, {}};
}

}  // namespace atcert
