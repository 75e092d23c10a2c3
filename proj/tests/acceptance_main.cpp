// Acceptance suite: one pass/fail line per criterion, exit 0 only when all
// pass. Everything is exact; the sweeps run the full enumerated corpus.
#include <atomic>
#include <cstdio>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "atcert/alon_tarsi.hpp"
#include "atcert/discharging.hpp"
#include "atcert/genlab.hpp"
#include "atcert/io.hpp"
#include "atcert/reducer.hpp"
#include "fixtures.hpp"

using namespace atcert;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

Orientation random_orientation(const std::vector<std::pair<int, int>>& edges, int n, Rng& rng) {
    Orientation d{n, {}};
    for (auto [u, v] : edges) {
        if (rng() % 2)
            d.arcs.emplace_back(u, v);
        else
            d.arcs.emplace_back(v, u);
    }
    return d;
}

// ---- criterion 1: |diff(D)| == |c_{P_G, eta(D)}| ------------------------

void criterion_identity() {
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> graphs;  // (n, edges)
    for (int l : {5, 6, 7}) {
        GeneratorSpec spec;
        spec.max_vertices = 7;
        spec.l = l;
        for (const auto& rot : enumerate_embedded_reps(spec)) {
            PlaneGraph g = PlaneGraphInternal::build_any(rot, 0);
            if (g.vertex_count() < 2) continue;
            graphs.emplace_back(g.vertex_count(), g.edges());
        }
    }
    Rng seeder(424242);
    while (graphs.size() < 520) {
        int n = 4 + static_cast<int>(seeder() % 4);
        auto edges = random_graph(n, 1, 2, seeder);
        if (!edges.empty()) graphs.emplace_back(n, edges);
    }

    std::atomic<long long> checked{0};
    std::atomic<bool> ok{true};
    std::string witness;
    std::mutex witness_mu;

    const int total = static_cast<int>(graphs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (int gi = 0; gi < total; ++gi) {
        if (!ok.load()) continue;
        const auto& [n, edges] = graphs[gi];
        const int m = static_cast<int>(edges.size());
        std::vector<Orientation> todo;
        if (m <= 12) {
            for (long long mask = 0; mask < (1ll << m); ++mask) {
                Orientation d{n, {}};
                for (int j = 0; j < m; ++j) {
                    auto [u, v] = edges[j];
                    if (mask >> j & 1)
                        d.arcs.emplace_back(u, v);
                    else
                        d.arcs.emplace_back(v, u);
                }
                todo.push_back(std::move(d));
            }
        } else {
            Rng rng(777000 + gi);
            for (int t = 0; t < 200; ++t) todo.push_back(random_orientation(edges, n, rng));
        }
        for (const auto& d : todo) {
            BigInt dd = diff(d);
            BigInt cc = poly_coefficient(n, edges, d.out_degrees());
            ++checked;
            if (boost::multiprecision::abs(dd) != boost::multiprecision::abs(cc)) {
                ok = false;
                std::lock_guard<std::mutex> lock(witness_mu);
                witness = "graph " + std::to_string(gi) + ": diff=" + dd.str() +
                          " coeff=" + cc.str();
                break;
            }
        }
    }
    std::ostringstream os;
    os << graphs.size() << " graphs, " << checked.load() << " orientations";
    if (!witness.empty()) os << "; " << witness;
    report(1, "Alon-Tarsi identity |diff| = |coefficient|", ok.load(), os.str());
}

// ---- criterion 2: one-way cut product ------------------------------------

void criterion_cut_product() {
    Rng rng(52025);
    Caps caps;
    caps.diff_edge_cap = 60;
    int trials = 0;
    bool ok = true;
    std::string witness;
    while (trials < 200) {
        int n1 = 2 + static_cast<int>(rng() % 5), n2 = 2 + static_cast<int>(rng() % 5);
        Orientation d1 = random_orientation(random_graph(n1, 1, 2, rng), n1, rng);
        Orientation d2 = random_orientation(random_graph(n2, 1, 2, rng), n2, rng);
        Orientation joined{n1 + n2, d1.arcs};
        for (auto [t, h] : d2.arcs) joined.arcs.emplace_back(t + n1, h + n1);
        // cross arcs X1 -> X2 only, placed last so pruning sees them dead
        for (int a = 0; a < n1; ++a)
            for (int b = 0; b < n2; ++b)
                if (rng() % 4 == 0) joined.arcs.emplace_back(a, n1 + b);
        ++trials;
        BigInt lhs = diff(joined, caps);
        BigInt rhs = diff(d1, caps) * diff(d2, caps);
        if (lhs != rhs) {
            ok = false;
            witness = "trial " + std::to_string(trials) + ": " + lhs.str() + " != " + rhs.str();
            break;
        }
    }
    report(2, "one-way cut product diff(D) = diff(D1)*diff(D2)", ok,
           std::to_string(trials) + " composed digraphs");
}

// ---- criterion 3: known AT values ----------------------------------------

void criterion_known_at() {
    bool ok = true;
    std::string witness;
    // the definition verbatim: sweep every orientation, full-subset diff
    auto at_by_definition = [](int n, const std::vector<std::pair<int, int>>& edges) {
        const int m = static_cast<int>(edges.size());
        int best = n + 1;
        for (long long mask = 0; mask < (1ll << m); ++mask) {
            Orientation d{n, {}};
            for (int j = 0; j < m; ++j) {
                auto [u, v] = edges[j];
                if (mask >> j & 1)
                    d.arcs.emplace_back(u, v);
                else
                    d.arcs.emplace_back(v, u);
            }
            if (diff_reference(d) != 0) best = std::min(best, d.max_out_degree() + 1);
        }
        return best;
    };
    auto expect = [&](int n, const std::vector<std::pair<int, int>>& edges, int want,
                      const std::string& name) {
        if (!ok) return;
        Orientation wit;
        int got = at_number(n, edges, Caps{}, &wit);
        bool fine = got == want;
        if (fine && want > 1) {
            // the witness must satisfy the definition under the full sweep
            fine = wit.max_out_degree() < want && diff_reference(wit) != 0;
        }
        if (fine && static_cast<int>(edges.size()) <= 10) {
            fine = at_by_definition(n, edges) == want;
        }
        if (!fine) {
            ok = false;
            witness = name + ": got " + std::to_string(got) + ", want " + std::to_string(want);
        }
    };
    auto cycle = [](int n) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < n; ++i)
            es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
        return es;
    };
    auto complete = [](int n) {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
        return es;
    };
    expect(3, complete(3), 3, "K3");
    expect(4, cycle(4), 2, "C4");
    for (int n : {6, 8, 10}) expect(n, cycle(n), 2, "C" + std::to_string(n));
    for (int n : {5, 7, 9}) expect(n, cycle(n), 3, "C" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) expect(n, complete(n), n, "K" + std::to_string(n));
    report(3, "known AT numbers (cycles, cliques)", ok, witness);
}

// ---- criteria 4..7: the corpus sweep --------------------------------------

struct SweepStats {
    std::atomic<long long> instances{0};
    std::atomic<long long> verify_fail{0};
    std::atomic<long long> theorem_violations{0};
    std::atomic<long long> detect_absent{0};
    std::atomic<long long> conserve_fail{0};
    std::atomic<long long> bound_fail{0};
    std::atomic<long long> unexplained_negative{0};
    std::atomic<long long> claim_checks{0};
    std::atomic<long long> small_at_fail{0};
    std::atomic<long long> small_choose_fail{0};
    std::atomic<long long> small_checked{0};
    std::mutex mu;
    std::vector<std::string> witnesses;

    void add_witness(const std::string& w) {
        std::lock_guard<std::mutex> lock(mu);
        if (witnesses.size() < 8) witnesses.push_back(w);
    }
};

void sweep_l(int l, SweepStats& st,
             std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool>& at_cache,
             std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool>& choose_cache,
             std::mutex& cache_mu) {
    GeneratorSpec spec;
    spec.max_vertices = 9;
    spec.l = l;
    auto reps = enumerate_embedded_reps(spec);
    const int nreps = static_cast<int>(reps.size());

#pragma omp parallel for schedule(dynamic, 1)
    for (int ri = 0; ri < nreps; ++ri) {
        for (const PlaneGraph& g : rep_instances(reps[ri])) {
            ++st.instances;
            // criterion 6
            std::optional<Configuration> cfg;
            try {
                cfg = detect(g, l);
            } catch (const Error& e) {
                st.add_witness("detect threw: " + std::string(e.what()));
                ++st.detect_absent;
                continue;
            }
            if (g.vertex_count() >= 2 && !cfg) {
                ++st.detect_absent;
                st.add_witness("detect absent on:\n" + write_rotsys(g, l));
            }
            // criterion 4
            Certificate cert;
            try {
                cert = extract(g, l);
            } catch (const TheoremViolation& e) {
                ++st.theorem_violations;
                st.add_witness("theorem violation: " + std::string(e.what()) + "\n" +
                               write_rotsys(g, l));
                continue;
            } catch (const Error& e) {
                ++st.verify_fail;
                st.add_witness("extract threw: " + std::string(e.what()) + "\n" +
                               write_rotsys(g, l));
                continue;
            }
            VerifyReport vrep = verify_certificate(g, cert);
            if (!vrep.all_pass() || vrep.used_trace_factorization) {
                ++st.verify_fail;
                st.add_witness("verify failed on:\n" + write_rotsys(g, l));
            }
            // criterion 7
            ChargeLedger led = apply_rules(g, l);
            AuditReport arep = audit(led, g, l);
            if (!arep.conservation_initial || !arep.conservation_final) {
                ++st.conserve_fail;
                st.add_witness("conservation failed on:\n" + write_rotsys(g, l));
            }
            for (const auto& b : arep.bounds) {
                if (b.applicable) ++st.claim_checks;
                if (b.applicable && !b.holds) {
                    ++st.bound_fail;
                    st.add_witness("bound " + b.name + " = " + b.value + " on:\n" +
                                   write_rotsys(g, l));
                }
            }
            for (const auto& neg : arep.negatives)
                if (!neg.config_attached) ++st.unexplained_negative;
            if (arep.theorem_violation_evidence) ++st.theorem_violations;
            // criterion 5 on the small instances
            if (g.vertex_count() <= 7) {
                std::set<std::pair<int, int>> m(cert.matching.begin(), cert.matching.end());
                std::vector<std::pair<int, int>> rest;
                for (const auto& e : g.edges())
                    if (!m.count(e)) rest.push_back(e);
                auto key = std::make_pair(g.vertex_count(), rest);
                bool have_at = false, have_choose = false, at_ok = false, choose_ok = false;
                {
                    std::lock_guard<std::mutex> lock(cache_mu);
                    auto it = at_cache.find(key);
                    if (it != at_cache.end()) {
                        have_at = true;
                        at_ok = it->second;
                    }
                    auto jt = choose_cache.find(key);
                    if (jt != choose_cache.end()) {
                        have_choose = true;
                        choose_ok = jt->second;
                    }
                }
                if (!have_at) {
                    at_ok = at_number(g.vertex_count(), rest) <= 3;
                    std::lock_guard<std::mutex> lock(cache_mu);
                    at_cache[key] = at_ok;
                }
                if (!have_choose) {
                    choose_ok = brute_force_choosable(g.vertex_count(), rest, 3, true).verdict ==
                                ChoosableVerdict::Choosable;
                    std::lock_guard<std::mutex> lock(cache_mu);
                    choose_cache[key] = choose_ok;
                }
                ++st.small_checked;
                if (!at_ok) {
                    ++st.small_at_fail;
                    st.add_witness("AT(G-M) > 3 on:\n" + write_rotsys(g, l));
                }
                if (!choose_ok) {
                    ++st.small_choose_fail;
                    st.add_witness("G-M not 3-choosable on:\n" + write_rotsys(g, l));
                }
            }
        }
    }
}

// ---- criterion 8: surgery soundness on the configuration fixtures ---------

bool fixture_surgery(const PlaneGraph& g, const Configuration& cfg, int l, std::string& err) {
    try {
        ReduceStep step = reduce_step_data(g, cfg);
        if (!arcs_acyclic(g.vertex_count(), step.arcs_added)) {
            err = config_kind_name(cfg.kind) + ": internal arcs not acyclic";
            return false;
        }
        std::vector<int> map;
        PlaneGraph reduced = g.delete_vertices(step.removed, &map);
        Certificate child = extract(reduced, l);
        Certificate lifted = lift_reduction(g, cfg, child, map);
        if (lifted.orientation.max_out_degree() > 2 ||
            lifted.orientation.out_degree(g.root()) != 0) {
            err = config_kind_name(cfg.kind) + ": out-degree cap violated";
            return false;
        }
        // enumerate in full even on the larger fixtures (lifted orientations
        // are acyclic, so the pruned search collapses)
        Caps wide;
        wide.diff_edge_cap = 61;
        VerifyReport rep = verify_certificate(g, lifted, wide);
        if (!rep.all_pass() || rep.used_trace_factorization) {
            err = config_kind_name(cfg.kind) + ": lifted certificate failed verification";
            return false;
        }
    } catch (const Error& e) {
        err = config_kind_name(cfg.kind) + ": " + e.what();
        return false;
    }
    return true;
}

void criterion_surgeries() {
    bool ok = true;
    std::string err;

    {
        PlaneGraph g = atctest::sun_fixture();
        auto lows = find_low_degree_vertices(g);
        ok = ok && !lows.empty() && fixture_surgery(g, lows.front(), 5, err);
        auto suns = find_suns(g);
        ok = ok && !suns.empty() && fixture_surgery(g, suns.front(), 5, err);
    }
    {
        PlaneGraph g = atctest::chain_pendant_fixture();
        auto cs = find_chain_pendant_threes(g);
        ok = ok && !cs.empty() && fixture_surgery(g, cs.front(), 5, err);
    }
    {
        PlaneGraph g = atctest::chain_two_minor_fixture();
        auto cs = find_chain_two_minor_triangles(g);
        ok = ok && !cs.empty() && fixture_surgery(g, cs.front(), 5, err);
    }
    {
        PlaneGraph g = atctest::special_five_cycle_fixture();
        auto cs = find_special_five_cycles(g);
        ok = ok && !cs.empty() && fixture_surgery(g, cs.front(), 7, err);
    }
    {
        // the truncated tetrahedron reaches AdjacentThrees through the full
        // detect priority chain
        PlaneGraph g = atctest::truncated_tetrahedron_fixture();
        auto cfg = detect(g, 5);
        bool fine = cfg && cfg->kind == ConfigKind::AdjacentThrees &&
                    fixture_surgery(g, *cfg, 5, err);
        if (!fine && err.empty()) err = "AdjacentThrees: detect did not reach it";
        ok = ok && fine;
    }
    {
        // pendant block through extract on two hexagons sharing a vertex
        PlaneGraph g = atctest::two_hexagons_fixture();
        auto cfg = detect(g, 5);
        bool fine = cfg && cfg->kind == ConfigKind::PendantBlock;
        if (fine) {
            Certificate cert = extract(g, 5);
            VerifyReport rep = verify_certificate(g, cert);
            fine = rep.all_pass() && cert.trace.type == TraceNode::Type::Split;
        }
        if (!fine) err = "PendantBlock: split extraction failed";
        ok = ok && fine;
    }
    report(8, "surgery soundness on the configuration fixtures", ok, err);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_identity();
    criterion_cut_product();
    criterion_known_at();

    SweepStats st;
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, bool> at_cache, choose_cache;
    std::mutex cache_mu;
    for (int l : {5, 6, 7}) sweep_l(l, st, at_cache, choose_cache, cache_mu);

    {
        std::ostringstream os;
        os << st.instances.load() << " instances, " << st.verify_fail.load()
           << " verify failures, " << st.theorem_violations.load() << " theorem violations";
        report(4, "certificate extraction end-to-end, |V| <= 9, l in {5,6,7}",
               st.verify_fail.load() == 0 && st.theorem_violations.load() == 0, os.str());
    }
    {
        std::ostringstream os;
        os << st.small_checked.load() << " small certificates";
        report(5, "AT(G-M) <= 3 and 3-choosability on |V| <= 7 certificates",
               st.small_at_fail.load() == 0 && st.small_choose_fail.load() == 0, os.str());
    }
    {
        std::ostringstream os;
        os << st.detect_absent.load() << " absents";
        report(6, "configuration completeness on every member with >= 2 vertices",
               st.detect_absent.load() == 0, os.str());
    }
    {
        // no corpus 6-face meets the three-minors hypotheses cleanly at this
        // scale, so drive that bound on its dedicated fixture as well
        bool hexagon_fixture_ok = false;
        long long extra_applicable = 0;
        {
            PlaneGraph g = atctest::three_minor_hexagon_fixture();
            ChargeLedger led = apply_rules(g, 5);
            AuditReport arep = audit(led, g, 5);
            for (const auto& b : arep.bounds)
                if (b.name.rfind("six_face_three_minors", 0) == 0 && b.applicable) {
                    ++extra_applicable;
                    hexagon_fixture_ok = b.holds;
                }
        }
        std::ostringstream os;
        os << st.claim_checks.load() + extra_applicable << " applicable bound checks, "
           << st.bound_fail.load() << " failures, " << st.conserve_fail.load()
           << " conservation failures, " << st.unexplained_negative.load()
           << " unexplained negatives, three-minors fixture "
           << (hexagon_fixture_ok ? "holds" : "FAILS");
        report(7, "discharging conservation and check-charge bounds",
               st.conserve_fail.load() == 0 && st.bound_fail.load() == 0 &&
                   st.unexplained_negative.load() == 0 && hexagon_fixture_ok,
               os.str());
    }

    criterion_surgeries();

    for (const auto& w : st.witnesses) std::printf("witness: %s\n", w.c_str());
    std::printf("%s\n", g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT");
    return g_failures == 0 ? 0 : 1;
}
