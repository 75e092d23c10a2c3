#include "doctest.h"

#include <set>

#include "atcert/configurations.hpp"
#include "atcert/genlab.hpp"
#include "fixtures.hpp"
#include "test_helpers.hpp"

using namespace atcert;
using namespace atctest;

TEST_CASE("minor triangles") {
    CHECK(find_minor_triangles(k4()).empty());  // all degrees 3

    PlaneGraph cp = chain_pendant_fixture();
    REQUIRE(cp.in_class(5));
    auto minors = find_minor_triangles(cp);
    REQUIRE(minors.size() == 1);  // exactly T0
    auto vs = cp.face(minors[0]).vertex_set();
    CHECK(vs == std::vector<int>{0, 1, 3});

    // a graph with every vertex of degree >= 4 has none: the sun fixture's
    // minor triangle count is exactly one (T1 at the 3-vertex v1)
    PlaneGraph sun = sun_fixture();
    REQUIRE(sun.in_class(5));
    auto sm = find_minor_triangles(sun);
    REQUIRE(sm.size() == 1);
    CHECK(sun.face(sm[0]).vertex_set() == std::vector<int>{0, 1, 6});
}

TEST_CASE("triangle chains from the chain fixture") {
    PlaneGraph cp = chain_pendant_fixture();
    auto minors = find_minor_triangles(cp);
    REQUIRE(minors.size() == 1);
    auto chains = find_triangle_chains(cp, minors[0]);
    // length-0 chains at the two 4-vertices (1 and 3), and the maximal chain
    // through T1 = [1 2 4] starting at w1=1 (two labelings of its far pair).
    bool has_len0_at_1 = false, has_len0_at_3 = false, has_len1 = false;
    for (const auto& c : chains) {
        if (c.length() == 0 && c.w == std::vector<int>{1}) has_len0_at_1 = true;
        if (c.length() == 0 && c.w == std::vector<int>{3}) has_len0_at_3 = true;
        if (c.length() == 1 && c.w == std::vector<int>{1, 2} && c.u == std::vector<int>{4})
            has_len1 = true;
    }
    CHECK(has_len0_at_1);
    CHECK(has_len0_at_3);
    CHECK(has_len1);
    CHECK_THROWS_AS(find_triangle_chains(cp, cp.outer_face()), Error);
}

TEST_CASE("chain pendant three finder") {
    PlaneGraph cp = chain_pendant_fixture();
    auto found = find_chain_pendant_threes(cp);
    bool expected = false;
    for (const auto& c : found) {
        if (c.roles_prefixed('w') == std::vector<int>{0, 1, 2} &&
            c.roles_prefixed('u') == std::vector<int>{3, 4} && c.role("x") == 5)
            expected = true;
        CHECK(validate_configuration(cp, c));
    }
    CHECK(expected);
}

TEST_CASE("chain with two minor triangles finder") {
    PlaneGraph g = chain_two_minor_fixture();
    REQUIRE(g.in_class(5));
    auto found = find_chain_two_minor_triangles(g);
    bool expected = false;
    for (const auto& c : found) {
        if (c.roles_prefixed('w') == std::vector<int>{0, 1} &&
            c.roles_prefixed('u') == std::vector<int>{2} && c.role("x") == 3 &&
            c.role("y") == 4 && c.role("z") == 5)
            expected = true;
        CHECK(validate_configuration(g, c));
    }
    CHECK(expected);
}

TEST_CASE("sun finder") {
    PlaneGraph sun = sun_fixture();
    auto found = find_suns(sun);
    REQUIRE(!found.empty());
    bool expected = false;
    for (const auto& c : found) {
        CHECK(validate_configuration(sun, c));
        if (c.role("v1") == 0) expected = true;
    }
    CHECK(expected);
}

TEST_CASE("special five cycle finder") {
    PlaneGraph g = special_five_cycle_fixture();
    REQUIRE(g.in_class(7));
    auto found = find_special_five_cycles(g);
    REQUIRE(!found.empty());
    bool expected = false;
    for (const auto& c : found) {
        CHECK(validate_configuration(g, c));
        if (c.role("u1") == 0 && c.role("u3") == 2 && c.role("u6") == 5) expected = true;
    }
    CHECK(expected);
}

TEST_CASE("detect priority on simple shapes") {
    // P3 splits at its cut vertex: the block rule precedes the degree rule
    PlaneGraph p3 = PlaneGraph::build({{1}, {0, 2}, {1}}, 0);
    auto c = detect(p3, 5);
    REQUIRE(c.has_value());
    CHECK(c->kind == ConfigKind::PendantBlock);
    CHECK(c->role("z") == 1);

    // a 2-connected host with degree-2 vertices: the triangle
    auto cl = detect(triangle(0), 5);
    REQUIRE(cl.has_value());
    CHECK(cl->kind == ConfigKind::LowDegreeVertex);
    CHECK(cl->role("v") == 1);

    // bowtie: not 2-connected
    auto cb = detect(bowtie(0), 5);
    REQUIRE(cb.has_value());
    CHECK(cb->kind == ConfigKind::PendantBlock);
    CHECK(cb->role("z") == 2);

    // truncated tetrahedron: 2-connected, all degrees 3, so two adjacent
    // 3-vertices are the first thing detect can report
    PlaneGraph tt = truncated_tetrahedron_fixture();
    REQUIRE(tt.in_class(5));
    auto ca = detect(tt, 5);
    REQUIRE(ca.has_value());
    CHECK(ca->kind == ConfigKind::AdjacentThrees);
    CHECK(ca->role("u") != tt.root());
    CHECK(ca->role("v") != tt.root());

    // the fixtures have degree-2 spacers, so detect reports those first
    auto cs = detect(sun_fixture(), 5);
    REQUIRE(cs.has_value());
    CHECK(cs->kind == ConfigKind::LowDegreeVertex);

    CHECK_THROWS_AS(detect(cycle_graph(4), 5), NotInClass);
}

TEST_CASE("detect is deterministic") {
    GeneratorSpec spec;
    spec.max_vertices = 6;
    spec.l = 5;
    for (const auto& g : enumerate_class_vec(spec)) {
        if (g.vertex_count() < 2) continue;
        auto a = detect(g, 5);
        auto b = detect(g, 5);
        REQUIRE(a.has_value());
        REQUIRE(b.has_value());
        CHECK(a->kind == b->kind);
        CHECK(a->roles == b->roles);
        CHECK(validate_configuration(g, *a));
    }
}

TEST_CASE("configurations avoid the root and survive revalidation") {
    GeneratorSpec spec;
    spec.max_vertices = 7;
    spec.l = 5;
    spec.sample = 150;
    spec.seed = 11;
    for (const auto& g : enumerate_class_vec(spec)) {
        if (g.vertex_count() < 2) continue;
        auto c = detect(g, 5);
        REQUIRE(c.has_value());
        if (c->kind != ConfigKind::PendantBlock) {
            for (int v : c->vertex_set()) CHECK(v != g.root());
        }
    }
}
