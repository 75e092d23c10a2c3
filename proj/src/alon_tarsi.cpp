#include "atcert/alon_tarsi.hpp"

#include <algorithm>
#include <cstdlib>

#include "atcert/errors.hpp"

namespace atcert {

std::vector<int> Orientation::out_degrees() const {
    std::vector<int> out(n, 0);
    for (const auto& a : arcs) ++out[a.first];
    return out;
}

int Orientation::max_out_degree() const {
    auto d = out_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

int Orientation::out_degree(int v) const {
    if (v < 0 || v >= n) throw UnknownVertex("out_degree: vertex out of range");
    int c = 0;
    for (const auto& a : arcs)
        if (a.first == v) ++c;
    return c;
}

std::vector<std::pair<int, int>> Orientation::base_edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(arcs.size());
    for (const auto& a : arcs)
        es.emplace_back(std::min(a.first, a.second), std::max(a.first, a.second));
    std::sort(es.begin(), es.end());
    return es;
}

namespace {

// Backtracking over arc subsets. bal = out - in among included arcs;
// rem_out/rem_in = undecided incident arcs by side. A vertex can still
// balance iff -rem_out <= bal <= rem_in.
template <typename Count>
struct DiffSearch {
    const std::vector<std::pair<int, int>>& arcs;
    std::vector<int> bal, rem_out, rem_in;
    Count total = 0;

    explicit DiffSearch(int n, const std::vector<std::pair<int, int>>& a)
        : arcs(a), bal(n, 0), rem_out(n, 0), rem_in(n, 0) {
        for (const auto& arc : arcs) {
            ++rem_out[arc.first];
            ++rem_in[arc.second];
        }
    }

    bool feasible(int v) const { return bal[v] <= rem_in[v] && -bal[v] <= rem_out[v]; }

    void run(size_t j, int parity) {
        if (j == arcs.size()) {
            total += parity ? -1 : 1;
            return;
        }
        auto [t, h] = arcs[j];
        --rem_out[t];
        --rem_in[h];
        // exclude
        if (feasible(t) && feasible(h)) run(j + 1, parity);
        // include
        ++bal[t];
        --bal[h];
        if (feasible(t) && feasible(h)) run(j + 1, parity ^ 1);
        --bal[t];
        ++bal[h];
        ++rem_out[t];
        ++rem_in[h];
    }
};

}  // namespace

BigInt diff(const Orientation& d, const Caps& caps) {
    const int m = static_cast<int>(d.arcs.size());
    if (m > caps.diff_edge_cap)
        throw TooLarge("diff: " + std::to_string(m) + " arcs exceed cap " +
                       std::to_string(caps.diff_edge_cap));
    if (m <= 61) {
        DiffSearch<long long> s(d.n, d.arcs);
        s.run(0, 0);
        return BigInt(s.total);
    }
    DiffSearch<BigInt> s(d.n, d.arcs);
    s.run(0, 0);
    return s.total;
}

BigInt diff_reference(const Orientation& d) {
    const int m = static_cast<int>(d.arcs.size());
    if (m > 28) throw TooLarge("diff_reference: too many arcs for the full sweep");
    long long total = 0;
    std::vector<int> bal(d.n, 0);
    for (unsigned long long mask = 0; mask < (1ull << m); ++mask) {
        std::fill(bal.begin(), bal.end(), 0);
        int count = 0;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1) {
                ++bal[d.arcs[j].first];
                --bal[d.arcs[j].second];
                ++count;
            }
        bool eulerian = true;
        for (int v = 0; v < d.n && eulerian; ++v) eulerian = bal[v] == 0;
        if (eulerian) total += (count % 2 == 0) ? 1 : -1;
    }
    return BigInt(total);
}

BigInt diff_parallel(const Orientation& d, const Caps& caps) {
    const int m = static_cast<int>(d.arcs.size());
    if (m > caps.diff_edge_cap)
        throw TooLarge("diff_parallel: " + std::to_string(m) + " arcs exceed cap " +
                       std::to_string(caps.diff_edge_cap));
    if (m > 61) return diff(d, caps);  // BigInt path stays serial
    const int p = std::min(m, 12);
    const long long prefixes = 1ll << p;
    long long total = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : total)
    for (long long mask = 0; mask < prefixes; ++mask) {
        DiffSearch<long long> s(d.n, d.arcs);
        bool alive = true;
        int parity = 0;
        for (int j = 0; j < p && alive; ++j) {
            auto [t, h] = d.arcs[j];
            --s.rem_out[t];
            --s.rem_in[h];
            if (mask >> j & 1) {
                ++s.bal[t];
                --s.bal[h];
                parity ^= 1;
            }
            alive = s.feasible(t) && s.feasible(h);
        }
        if (alive) {
            s.run(p, parity);
            total += s.total;
        }
    }
    return BigInt(total);
}

bool is_AT(const Orientation& d, const Caps& caps) { return diff(d, caps) != 0; }

bool is_good(const Orientation& d, int v0, const Caps& caps) {
    if (v0 < 0 || v0 >= d.n) throw UnknownVertex("is_good: v0 out of range");
    return d.max_out_degree() <= 2 && d.out_degree(v0) == 0 && is_AT(d, caps);
}

namespace {

struct CoeffSearch {
    const std::vector<std::pair<int, int>>& edges;
    std::vector<int> need, rem;
    long long total = 0;

    CoeffSearch(int n, const std::vector<std::pair<int, int>>& e, const std::vector<int>& eta)
        : edges(e), need(eta), rem(n, 0) {
        for (const auto& edge : edges) {
            ++rem[edge.first];
            ++rem[edge.second];
        }
    }

    void run(size_t j, int sign) {
        if (j == edges.size()) {
            total += sign;
            return;
        }
        auto [u, v] = edges[j];  // factor (x_v - x_u), u < v
        --rem[u];
        --rem[v];
        // pick x_v
        if (need[v] > 0) {
            --need[v];
            if (need[u] <= rem[u] && need[v] <= rem[v]) run(j + 1, sign);
            ++need[v];
        }
        // pick -x_u
        if (need[u] > 0) {
            --need[u];
            if (need[u] <= rem[u] && need[v] <= rem[v]) run(j + 1, -sign);
            ++need[u];
        }
        ++rem[u];
        ++rem[v];
    }
};

}  // namespace

BigInt poly_coefficient(int n, const std::vector<std::pair<int, int>>& edges,
                        const std::vector<int>& eta, const Caps& caps) {
    if (static_cast<int>(eta.size()) != n) throw Error("poly_coefficient: eta size mismatch");
    const int m = static_cast<int>(edges.size());
    if (m > caps.diff_edge_cap)
        throw TooLarge("poly_coefficient: " + std::to_string(m) + " edges exceed cap " +
                       std::to_string(caps.diff_edge_cap));
    long long sum = 0;
    for (int x : eta) {
        if (x < 0) throw Error("poly_coefficient: negative exponent");
        sum += x;
    }
    if (sum != m) return 0;  // homogeneous of degree |E|
    std::vector<std::pair<int, int>> sorted = edges;
    for (auto& e : sorted)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    CoeffSearch s(n, sorted, eta);
    s.run(0, 1);
    return BigInt(s.total);
}

BigInt poly_coefficient(const PlaneGraph& g, const std::vector<int>& eta, const Caps& caps) {
    return poly_coefficient(g.vertex_count(), g.edges(), eta, caps);
}

namespace {

// Backtracking over edge directions under per-vertex out-degree caps.
// Direction toward the smaller vertex id is tried first.
struct OrientSearch {
    int n;
    const std::vector<std::pair<int, int>>& edges;
    const Caps& caps;
    std::vector<int> cap_out;
    std::vector<int> outdeg;
    std::vector<std::pair<int, int>> arcs;
    std::optional<Orientation> found;

    OrientSearch(int n_, const std::vector<std::pair<int, int>>& e, const Caps& c)
        : n(n_), edges(e), caps(c), outdeg(n_, 0) {}

    void run(size_t j) {
        if (found) return;
        if (j == edges.size()) {
            Orientation d{n, arcs};
            if (diff(d, caps) != 0) found = d;
            return;
        }
        auto [u, v] = edges[j];  // u < v
        if (outdeg[v] < cap_out[v]) {
            ++outdeg[v];
            arcs.emplace_back(v, u);
            run(j + 1);
            arcs.pop_back();
            --outdeg[v];
        }
        if (found) return;
        if (outdeg[u] < cap_out[u]) {
            ++outdeg[u];
            arcs.emplace_back(u, v);
            run(j + 1);
            arcs.pop_back();
            --outdeg[u];
        }
    }
};

std::vector<std::pair<int, int>> sorted_edges(std::vector<std::pair<int, int>> es) {
    for (auto& e : es)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(es.begin(), es.end());
    return es;
}

}  // namespace

int at_number(int n, const std::vector<std::pair<int, int>>& edges, const Caps& caps,
              Orientation* witness) {
    const int m = static_cast<int>(edges.size());
    if (m > caps.at_edge_cap)
        throw TooLarge("at_number: " + std::to_string(m) + " edges exceed cap " +
                       std::to_string(caps.at_edge_cap));
    auto es = sorted_edges(edges);
    for (int k = 1; k <= std::max(1, n); ++k) {
        OrientSearch s(n, es, caps);
        s.cap_out.assign(n, k - 1);
        s.run(0);
        if (s.found) {
            if (witness) *witness = *s.found;
            return k;
        }
    }
    throw Error("at_number: no AT orientation found up to k = n (unreachable)");
}

int at_number(const PlaneGraph& g, const Caps& caps, Orientation* witness) {
    return at_number(g.vertex_count(), g.edges(), caps, witness);
}

std::optional<Orientation> find_good_orientation(int n,
                                                 const std::vector<std::pair<int, int>>& edges,
                                                 int v0, const Caps& caps) {
    if (v0 < 0 || v0 >= n) throw UnknownVertex("find_good_orientation: v0 out of range");
    const int m = static_cast<int>(edges.size());
    if (m > caps.diff_edge_cap)
        throw TooLarge("find_good_orientation: " + std::to_string(m) + " edges exceed cap " +
                       std::to_string(caps.diff_edge_cap));
    auto es = sorted_edges(edges);
    OrientSearch s(n, es, caps);
    s.cap_out.assign(n, 2);
    s.cap_out[v0] = 0;
    s.run(0);
    return s.found;
}

std::optional<Orientation> find_good_orientation(const PlaneGraph& g, int v0, const Caps& caps) {
    return find_good_orientation(g.vertex_count(), g.edges(), v0, caps);
}

bool arcs_acyclic(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& a : arcs) adj[a.first].push_back(a.second);
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    bool cyc = false;
    auto dfs = [&](auto&& self, int v) -> void {
        state[v] = 1;
        for (int u : adj[v]) {
            if (cyc) return;
            if (state[u] == 1) {
                cyc = true;
                return;
            }
            if (state[u] == 0) self(self, u);
        }
        state[v] = 2;
    };
    for (int v = 0; v < n && !cyc; ++v)
        if (state[v] == 0) dfs(dfs, v);
    return !cyc;
}

std::vector<std::pair<int, int>> induced_arcs(const std::vector<std::pair<int, int>>& arcs,
                                              const std::vector<char>& keep) {
    std::vector<std::pair<int, int>> out;
    for (const auto& a : arcs)
        if (keep[a.first] && keep[a.second]) out.push_back(a);
    return out;
}

}  // namespace atcert
