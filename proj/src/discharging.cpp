#include "atcert/discharging.hpp"

#include <algorithm>
#include <set>

#include "atcert/errors.hpp"

namespace atcert {

Rational ChargeLedger::sum_initial() const {
    Rational s = 0;
    for (const auto& r : vertex_initial) s += r;
    for (const auto& r : face_initial) s += r;
    return s;
}

Rational ChargeLedger::sum_final() const {
    Rational s = 0;
    for (const auto& r : vertex_final) s += r;
    for (const auto& r : face_final) s += r;
    return s;
}

Rational ChargeLedger::received(const Element& e) const {
    Rational s = 0;
    for (const auto& t : transfers)
        if (t.to == e) s += t.amount;
    return s;
}

Rational ChargeLedger::sent(const Element& e) const {
    Rational s = 0;
    for (const auto& t : transfers)
        if (t.from == e) s += t.amount;
    return s;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger led;
    for (int v = 0; v < g.vertex_count(); ++v)
        led.vertex_initial.emplace_back(g.degree(v) - 4);
    for (const auto& f : g.faces()) led.face_initial.emplace_back(f.degree() - 4);
    led.vertex_final = led.vertex_initial;
    led.face_final = led.face_initial;
    return led;
}

namespace {

struct FaceInfo {
    std::vector<std::set<int>> adjacent;      // distinct faces sharing >= 1 edge
    std::vector<std::set<int>> adj_triangles; // distinct adjacent 3-faces
    std::vector<std::set<int>> verts;         // distinct boundary vertices
};

FaceInfo face_info(const PlaneGraph& g) {
    FaceInfo fi;
    const int F = g.face_count();
    fi.adjacent.resize(F);
    fi.adj_triangles.resize(F);
    fi.verts.resize(F);
    for (const auto& f : g.faces()) {
        for (int v : f.vertex_set()) fi.verts[f.id].insert(v);
        for (const auto& d : f.walk) {
            int other = g.face_at(d.second, d.first);
            if (other != f.id) {
                fi.adjacent[f.id].insert(other);
                if (g.face(other).degree() == 3) fi.adj_triangles[f.id].insert(other);
            }
        }
    }
    return fi;
}

// The 3-face corner at a 3-vertex, if any (in class there is at most one).
int triangle_corner(const PlaneGraph& g, int v) {
    for (int f : g.corner_faces(v))
        if (g.face(f).degree() == 3) return f;
    return -1;
}

bool is_minor_3vertex(const PlaneGraph& g, int v) {
    return g.degree(v) == 3 && v != g.root() && triangle_corner(g, v) >= 0;
}

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, int l) {
    if (!g.in_class(l))
        throw NotInClass("apply_rules: graph is not in P_{4," + std::to_string(l) + "}");
    ChargeLedger led = initial_charges(g);
    const int f0 = g.outer_face();
    const int v0 = g.root();
    FaceInfo fi = face_info(g);

    auto transfer = [&](Element from, Element to, Rational amount, const char* rule) {
        led.transfers.push_back({from, to, amount, rule});
        auto& from_c = from.is_face ? led.face_final[from.id] : led.vertex_final[from.id];
        auto& to_c = to.is_face ? led.face_final[to.id] : led.vertex_final[to.id];
        from_c -= amount;
        to_c += amount;
    };
    auto face_el = [](int id) { return Element{true, id}; };
    auto vert_el = [](int id) { return Element{false, id}; };

    // R1: every face other than f0 pays each adjacent 3-face != f0 one third
    // (f0's own payment to triangles is the business of the outer-face rule).
    for (const auto& f : g.faces()) {
        if (f.degree() != 3 || f.id == f0) continue;
        for (int h : fi.adjacent[f.id])
            if (h != f0) transfer(face_el(h), face_el(f.id), Rational(1, 3), "R1");
    }

    // R2: 3-vertices != v0 collect from their corners (f0 corners excluded;
    // the outer-face rule pays those).
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == v0 || g.degree(v) != 3) continue;
        int tc = triangle_corner(g, v);
        for (int h : g.corner_faces(v)) {
            if (h == f0) continue;
            if (tc >= 0) {
                if (h != tc) transfer(face_el(h), vert_el(v), Rational(1, 2), "R2");
            } else {
                transfer(face_el(h), vert_el(v), Rational(1, 3), "R2");
            }
        }
    }

    if (l == 5) {
        // R3: 5+-vertices pay 6-faces s/6 where s counts adjacent triangles
        // incident to the vertex.
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (u == v0 || g.degree(u) < 5) continue;
            for (const auto& f : g.faces()) {
                if (f.degree() != 6 || f.id == f0) continue;
                int s = 0;
                for (int t : fi.adj_triangles[f.id])
                    if (fi.verts[t].count(u)) ++s;
                if (s > 0) transfer(vert_el(u), face_el(f.id), Rational(s, 6), "R3");
            }
        }
    }
    if (l == 7) {
        // R3: 5+-vertices pay 1/6 to 5-faces they are on or that touch one of
        // their triangles.
        for (int u = 0; u < g.vertex_count(); ++u) {
            if (u == v0 || g.degree(u) < 5) continue;
            for (const auto& f : g.faces()) {
                if (f.degree() != 5 || f.id == f0) continue;
                bool incident = fi.verts[f.id].count(u) > 0;
                bool via_triangle = false;
                for (int t : fi.adj_triangles[f.id]) via_triangle |= fi.verts[t].count(u) > 0;
                if (incident || via_triangle)
                    transfer(vert_el(u), face_el(f.id), Rational(1, 6), "R3");
            }
        }
    }

    // Outer-face clauses (R3 for l=6, R4 for l=5/7): f0 pays adjacent
    // triangles and incident 3-vertices.
    const char* outer_rule = l == 6 ? "R3" : "R4";
    for (int t : fi.adjacent[f0]) {
        if (t == f0) continue;
        if (g.face(t).degree() == 3) transfer(face_el(f0), face_el(t), Rational(1, 3), outer_rule);
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == v0 || g.degree(v) != 3) continue;
        for (int h : g.corner_faces(v))
            if (h == f0) transfer(face_el(f0), vert_el(v), Rational(1, 2), outer_rule);
    }

    // v0 clauses (l=5: 6-faces, l=7: 5-faces): v0 pays 1/3 to each such face
    // it lies on or reaches through an incident triangle.
    if (l == 5 || l == 7) {
        const int target_deg = l == 5 ? 6 : 5;
        for (const auto& f : g.faces()) {
            if (f.degree() != target_deg || f.id == f0) continue;
            bool incident = fi.verts[f.id].count(v0) > 0;
            bool via_triangle = false;
            for (int t : fi.adj_triangles[f.id]) via_triangle |= fi.verts[t].count(v0) > 0;
            if (incident || via_triangle)
                transfer(vert_el(v0), face_el(f.id), Rational(1, 3), "R4");
        }
    }

    return led;
}

namespace {

bool boundary_is_simple_cycle(const Face& f) {
    auto wv = f.walk_vertices();
    std::set<int> s(wv.begin(), wv.end());
    return f.degree() >= 3 && s.size() == wv.size();
}

}  // namespace

bool AuditReport::all_pass() const {
    if (!conservation_initial || !conservation_final) return false;
    if (theorem_violation_evidence) return false;
    for (const auto& b : bounds)
        if (b.applicable && !b.holds) return false;
    return true;
}

AuditReport audit(const ChargeLedger& led, const PlaneGraph& g, int l) {
    AuditReport rep;
    const int f0 = g.outer_face();
    const int v0 = g.root();

    rep.sum_initial = rational_str(led.sum_initial());
    rep.sum_final = rational_str(led.sum_final());
    rep.conservation_initial = led.sum_initial() == Rational(-8);
    rep.conservation_final = led.sum_final() == Rational(-8);

    // negative elements other than v0/f0, explained by a configuration
    std::optional<Configuration> cfg = detect(g, l);
    rep.configuration_free = !cfg.has_value();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == v0 || led.vertex_final[v] >= 0) continue;
        rep.negatives.push_back({Element{false, v}, rational_str(led.vertex_final[v]),
                                 cfg.has_value(), cfg});
    }
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == f0 || led.face_final[f] >= 0) continue;
        rep.negatives.push_back({Element{true, f}, rational_str(led.face_final[f]),
                                 cfg.has_value(), cfg});
    }
    if (rep.configuration_free) {
        Rational rest = Rational(-8) - led.vertex_final[v0] - led.face_final[f0];
        rep.derived_contradiction_sum = rational_str(rest);
        rep.contradiction_bound = l == 6 ? "-13/4" : "-35/12";
        // a configuration-free class member with >= 2 vertices would falsify
        // the theorem (K1 is trivially configuration-free and fine)
        rep.theorem_violation_evidence = g.vertex_count() >= 2;
    }

    // ch*(v0) lower bound, needs d(v0) >= 2
    {
        AuditBound b;
        b.name = "v0_lower";
        b.applicable = g.degree(v0) >= 2;
        Rational bound = l == 6 ? Rational(-2) : Rational(-7, 3);
        b.bound = rational_str(bound);
        b.value = rational_str(led.vertex_final[v0]);
        b.holds = !b.applicable || led.vertex_final[v0] >= bound;
        if (!b.applicable) b.note = "d(v0) < 2";
        rep.bounds.push_back(b);
    }

    // ch*(f0) lower bound, needs the boundary to be a cycle without adjacent
    // 3-vertices on it and degree >= 3
    {
        AuditBound b;
        b.name = "f0_lower";
        const Face& f = g.face(f0);
        bool simple = boundary_is_simple_cycle(f);
        bool adj3 = false;
        if (simple) {
            auto wv = f.walk_vertices();
            for (size_t i = 0; i < wv.size(); ++i) {
                int a = wv[i], c = wv[(i + 1) % wv.size()];
                if (a != v0 && c != v0 && g.degree(a) == 3 && g.degree(c) == 3) adj3 = true;
            }
        }
        b.applicable = simple && !adj3;
        b.bound = rational_str(Rational(-11, 4));
        b.value = rational_str(led.face_final[f0]);
        b.holds = !b.applicable || led.face_final[f0] >= Rational(-11, 4);
        if (!b.applicable) b.note = simple ? "adjacent 3-vertices on the outer boundary"
                                           : "outer boundary is not a simple cycle";
        rep.bounds.push_back(b);
    }

    // The two 6-face lower bounds for l=5 apply only where the structural
    // hypotheses hold on the face and its triangles: minimum degree 3 away
    // from v0, and no adjacent-3 or chain configuration touching them (those
    // would let the neighborhood dodge the 5+-vertex dichotomy).
    if (l == 5) {
        FaceInfo fi = face_info(g);
        std::vector<Configuration> blockers;
        bool blockers_ready = false;
        auto support_clean = [&](const std::set<int>& support) {
            for (int v : support)
                if (v != v0 && g.degree(v) <= 2) return false;
            if (!blockers_ready) {
                for (ConfigKind k : {ConfigKind::AdjacentThrees, ConfigKind::ChainPendantThree,
                                     ConfigKind::ChainTwoMinorTriangles}) {
                    auto v = find_all(g, k);
                    blockers.insert(blockers.end(), v.begin(), v.end());
                }
                blockers_ready = true;
            }
            for (const auto& inst : blockers)
                for (int v : inst.vertex_set())
                    if (support.count(v)) return false;
            return true;
        };
        for (const auto& f : g.faces()) {
            if (f.degree() != 6 || f.id == f0 || !boundary_is_simple_cycle(f)) continue;
            auto wv = f.walk_vertices();
            int minor3 = 0, three = 0;
            for (int v : wv) {
                if (g.degree(v) == 3 && v != v0) {
                    ++three;
                    if (is_minor_3vertex(g, v)) ++minor3;
                }
            }
            int tri = static_cast<int>(fi.adj_triangles[f.id].size());
            std::set<int> support(wv.begin(), wv.end());
            for (int t : fi.adj_triangles[f.id])
                for (int v : fi.verts[t]) support.insert(v);

            if (minor3 == 3) {
                AuditBound b;
                b.name = "six_face_three_minors_f" + std::to_string(f.id);
                b.applicable = support_clean(support);
                Rational got = led.received(Element{true, f.id});
                b.value = rational_str(got);
                b.bound = "1/2";
                b.holds = !b.applicable || got >= Rational(1, 2);
                if (!b.applicable) b.note = "hypotheses fail on the face support";
                rep.bounds.push_back(b);
            }
            if (three == 2 && tri == 4) {
                AuditBound b;
                b.name = "six_face_four_triangles_f" + std::to_string(f.id);
                b.applicable = support_clean(support);
                Rational got = led.received(Element{true, f.id});
                b.value = rational_str(got);
                b.bound = "1/3";
                b.holds = !b.applicable || got >= Rational(1, 3);
                if (!b.applicable) b.note = "hypotheses fail on the face support";
                rep.bounds.push_back(b);
            }
        }
    }

    return rep;
}

std::optional<std::string> check_transfer_guards(const PlaneGraph& g, int l,
                                                 const ChargeLedger& led) {
    const int f0 = g.outer_face();
    const int v0 = g.root();
    FaceInfo fi = face_info(g);
    auto fail = [&](const Transfer& t, const std::string& why) {
        return t.rule + " " + (t.from.is_face ? "f" : "v") + std::to_string(t.from.id) + "->" +
               (t.to.is_face ? "f" : "v") + std::to_string(t.to.id) + ": " + why;
    };
    const char* outer_rule = l == 6 ? "R3" : "R4";
    for (const auto& t : led.transfers) {
        if (t.rule == "R1") {
            if (!t.from.is_face || !t.to.is_face) return fail(t, "R1 is face-to-face");
            if (t.to.id == f0 || g.face(t.to.id).degree() != 3)
                return fail(t, "target must be a 3-face != f0");
            if (t.from.id == f0) return fail(t, "f0 pays under the outer rule, not R1");
            if (!fi.adjacent[t.to.id].count(t.from.id)) return fail(t, "faces not adjacent");
            if (t.amount != Rational(1, 3)) return fail(t, "amount must be 1/3");
        } else if (t.rule == "R2") {
            if (!t.from.is_face || t.to.is_face) return fail(t, "R2 is face-to-vertex");
            int v = t.to.id;
            if (v == v0 || g.degree(v) != 3) return fail(t, "target must be a 3-vertex != v0");
            if (t.from.id == f0) return fail(t, "f0 pays under the outer rule, not R2");
            auto corners = g.corner_faces(v);
            if (std::find(corners.begin(), corners.end(), t.from.id) == corners.end())
                return fail(t, "source face not incident to the vertex");
            int tc = triangle_corner(g, v);
            if (tc >= 0) {
                if (t.from.id == tc) return fail(t, "the triangle corner does not pay");
                if (t.amount != Rational(1, 2)) return fail(t, "minor 3-vertex gets 1/2");
            } else if (t.amount != Rational(1, 3)) {
                return fail(t, "non-minor 3-vertex gets 1/3");
            }
        } else if (t.rule == "R3" && l == 5) {
            if (t.from.is_face || !t.to.is_face) return fail(t, "R3 is vertex-to-face");
            int u = t.from.id, f = t.to.id;
            if (u == v0 || g.degree(u) < 5) return fail(t, "source must be a 5+-vertex != v0");
            if (f == f0 || g.face(f).degree() != 6) return fail(t, "target must be a 6-face != f0");
            int s = 0;
            for (int tr : fi.adj_triangles[f])
                if (fi.verts[tr].count(u)) ++s;
            if (s == 0 || t.amount != Rational(s, 6)) return fail(t, "amount must be s/6");
        } else if (t.rule == "R3" && l == 7) {
            if (t.from.is_face || !t.to.is_face) return fail(t, "R3 is vertex-to-face");
            int u = t.from.id, f = t.to.id;
            if (u == v0 || g.degree(u) < 5) return fail(t, "source must be a 5+-vertex != v0");
            if (f == f0 || g.face(f).degree() != 5) return fail(t, "target must be a 5-face != f0");
            bool incident = fi.verts[f].count(u) > 0;
            bool via = false;
            for (int tr : fi.adj_triangles[f]) via |= fi.verts[tr].count(u) > 0;
            if (!incident && !via) return fail(t, "face not incident nor triangle-adjacent");
            if (t.amount != Rational(1, 6)) return fail(t, "amount must be 1/6");
        } else if (t.rule == outer_rule && t.from.is_face) {
            if (t.from.id != f0) return fail(t, "outer rule source must be f0");
            if (t.to.is_face) {
                if (g.face(t.to.id).degree() != 3 || !fi.adjacent[f0].count(t.to.id))
                    return fail(t, "f0 pays adjacent 3-faces");
                if (t.amount != Rational(1, 3)) return fail(t, "amount must be 1/3");
            } else {
                int v = t.to.id;
                if (v == v0 || g.degree(v) != 3) return fail(t, "f0 pays 3-vertices != v0");
                auto corners = g.corner_faces(v);
                if (std::count(corners.begin(), corners.end(), f0) == 0)
                    return fail(t, "vertex not incident to f0");
                if (t.amount != Rational(1, 2)) return fail(t, "amount must be 1/2");
            }
        } else if (t.rule == "R4" && !t.from.is_face) {
            if (l == 6) return fail(t, "no v0 rule for l=6");
            if (t.from.id != v0) return fail(t, "vertex source of R4 must be v0");
            if (!t.to.is_face) return fail(t, "v0 pays faces");
            int f = t.to.id;
            int want = l == 5 ? 6 : 5;
            if (f == f0 || g.face(f).degree() != want) return fail(t, "wrong target face");
            bool incident = fi.verts[f].count(v0) > 0;
            bool via = false;
            for (int tr : fi.adj_triangles[f]) via |= fi.verts[tr].count(v0) > 0;
            if (!incident && !via) return fail(t, "face not incident nor triangle-adjacent");
            if (t.amount != Rational(1, 3)) return fail(t, "amount must be 1/3");
        } else {
            return fail(t, "unknown rule for l=" + std::to_string(l));
        }
    }
    return std::nullopt;
}

}  // namespace atcert
