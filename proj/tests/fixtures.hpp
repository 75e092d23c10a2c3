#pragma once

#include <vector>

#include "atcert/plane_graph.hpp"

// Hand-built class members containing one configuration each, closed up with
// an outer cycle threaded through the configuration's free slots (spacer runs
// long enough that no forbidden cycle appears). Spacer vertices have degree 2
// and anchor vertices degree 3, so these exercise the finders and surgeries
// in isolation rather than the detect priority order.
namespace atctest {

using atcert::PlaneGraph;

// The five-triangle sun closed up, l=5: 6-face v1..v6 (0..5), apexes
// u1..u5 (6..10), d(v1)=3, everything else named degree 4.
inline PlaneGraph sun_fixture() {
    const int q = 26;
    std::vector<std::vector<int>> rot(30);
    rot[0] = {6, 1, 5};           // v1: u1 v2 v6
    rot[1] = {0, 6, 7, 2};        // v2: v1 u1 u2 v3
    rot[2] = {1, 7, 8, 3};        // v3
    rot[3] = {2, 8, 9, 4};        // v4
    rot[4] = {3, 9, 10, 5};       // v5
    rot[5] = {4, 10, q, 0};       // v6: v5 u5 q v1
    // u_i: prev-on-cycle, next-on-cycle, v_{i+1}, v_i
    rot[6] = {29, 11, 1, 0};
    rot[7] = {13, 14, 2, 1};
    rot[8] = {16, 17, 3, 2};
    rot[9] = {19, 20, 4, 3};
    rot[10] = {22, 23, 5, 4};
    // spacer runs a=11..13, b=14..16, c=17..19, d=20..22, e=23..25, f=27..29
    auto run = [&](int first, int before, int after) {
        rot[first] = {before, first + 1};
        rot[first + 1] = {first, first + 2};
        rot[first + 2] = {first + 1, after};
    };
    run(11, 6, 7);
    run(14, 7, 8);
    run(17, 8, 9);
    run(20, 9, 10);
    run(23, 10, q);
    rot[q] = {25, 27, 5};  // q: prev next v6
    run(27, q, 6);
    return PlaneGraph::build(rot, 12);
}

// A minor triangle with a length-1 chain and a pendant 3-vertex, closed up,
// l=5: T0=[w0 w1 u0], T1=[w1 w2 u1], pendant x at w2.
// w0=0 w1=1 w2=2 u0=3 u1=4 x=5.
inline PlaneGraph chain_pendant_fixture() {
    const int p = 6, r = 19;
    std::vector<std::vector<int>> rot(23);
    rot[0] = {1, p, 3};        // w0: w1 p u0
    rot[1] = {2, 0, 3, 4};     // w1: w2 w0 u0 u1
    rot[2] = {5, r, 1, 4};     // w2: x r w1 u1
    rot[3] = {7 + 2, 10, 1, 0};   // u0: prev next w1 w0
    rot[4] = {10 + 2, 13, 2, 1};  // u1: prev next w2 w1
    rot[5] = {13 + 2, 16, 2};     // x: prev next w2
    auto run = [&](int first, int before, int after) {
        rot[first] = {before, first + 1};
        rot[first + 1] = {first, first + 2};
        rot[first + 2] = {first + 1, after};
    };
    rot[p] = {22, 7, 0};  // p: prev next w0
    run(7, p, 3);
    run(10, 3, 4);
    run(13, 4, 5);
    run(16, 5, r);
    rot[r] = {18, 20, 2};  // r: prev next w2
    run(20, r, p);
    return PlaneGraph::build(rot, 8);
}

// Two minor triangles joined by a (4,4)-edge (chain length 0), closed up,
// l=5: T0=[w0 w1 u0] and [x y z] with the connector w1-y.
// w0=0 w1=1 u0=2 x=3 y=4 z=5.
inline PlaneGraph chain_two_minor_fixture() {
    const int A = 6, B = 16, C = 20, D = 24;
    std::vector<std::vector<int>> rot(28);
    rot[0] = {1, A, 2};        // w0: w1 A u0
    rot[1] = {4, D, 0, 2};     // w1: y D w0 u0
    rot[2] = {9, 10, 1, 0};    // u0: prev next w1 w0
    rot[3] = {B, 4, 5};        // x: B y z
    rot[4] = {3, C, 1, 5};     // y: x C w1 z
    rot[5] = {12, 13, 3, 4};   // z: prev next x y
    auto run = [&](int first, int before, int after) {
        rot[first] = {before, first + 1};
        rot[first + 1] = {first, first + 2};
        rot[first + 2] = {first + 1, after};
    };
    rot[A] = {27, 7, 0};
    run(7, A, 2);
    run(10, 2, 5);
    run(13, 5, B);
    rot[B] = {15, 17, 3};
    run(17, B, C);
    rot[C] = {19, 21, 4};
    run(21, C, D);
    rot[D] = {23, 25, 1};
    run(25, D, A);
    return PlaneGraph::build(rot, 8);
}

// A special 5-cycle closed up, l=7: cycle u1..u5 (0..4) with the triangle
// [u1 u5 u6], u6=5; d(u1)=d(u3)=3, the rest degree 4. The u6..u2 gap carries
// five spacers: the inner u6-u5-u1-u2 path has length 3, so shorter gaps
// would close a 7-cycle.
inline PlaneGraph special_five_cycle_fixture() {
    const int a = 8, b = 13;
    std::vector<std::vector<int>> rot(21);
    rot[0] = {5, 1, 4};        // u1: u6 u2 u5
    rot[1] = {0, 20, 6, 2};    // u2: u1 prev next u3
    rot[2] = {3, 1, a};        // u3: u4 u2 a
    rot[3] = {4, 2, 10, 11};   // u4: u5 u3 prev next
    rot[4] = {5, 0, 3, b};     // u5: u6 u1 u4 b
    rot[5] = {16, 0, 4, 15};   // u6: next u1 u5 prev
    rot[6] = {1, 7};
    rot[7] = {6, a};
    rot[a] = {7, 9, 2};        // a: prev next u3
    rot[9] = {a, 10};
    rot[10] = {9, 3};
    rot[11] = {3, 12};
    rot[12] = {11, b};
    rot[b] = {12, 14, 4};      // b: prev next u5
    rot[14] = {b, 15};
    rot[15] = {14, 5};
    for (int s = 16; s <= 20; ++s) rot[s] = {s - 1, s + 1};
    rot[16] = {5, 17};
    rot[20] = {19, 1};
    return PlaneGraph::build(rot, 18);
}

// A 6-face with three minor 3-vertices whose triangles carry 5-vertices:
// the three-minors lower bound applies non-vacuously (the face receives
// exactly 1/2). Core: hexagon v1..v6 = 0..5 with d(v1)=d(v3)=d(v5)=3,
// triangles on edges v1v2, v3v4, v5v6 with apexes u1=6, u3=7, u5=8 of
// degree 5 (two closure edges plus a short spoke to the cycle).
inline PlaneGraph three_minor_hexagon_fixture() {
    std::vector<std::vector<int>> rot(36);
    rot[0] = {6, 1, 5};         // v1
    rot[1] = {0, 6, 14, 2};     // v2: v1 u1 A2 v3
    rot[2] = {1, 7, 3};         // v3
    rot[3] = {2, 7, 23, 4};     // v4: v3 u3 A4 v5
    rot[4] = {3, 8, 5};         // v5
    rot[5] = {4, 8, 32, 0};     // v6: v5 u5 A6 v1
    rot[6] = {35, 9, 10, 1, 0};   // u1: prev next P1 v2 v1
    rot[7] = {17, 18, 19, 3, 2};  // u3
    rot[8] = {26, 27, 28, 5, 4};  // u5
    auto run3 = [&](int first, int before, int after) {
        rot[first] = {before, first + 1};
        rot[first + 1] = {first, first + 2};
        rot[first + 2] = {first + 1, after};
    };
    rot[9] = {6, 10};
    rot[10] = {9, 11, 6};  // P1: prev next u1
    run3(11, 10, 14);
    rot[14] = {13, 15, 1};  // A2
    run3(15, 14, 7);
    rot[18] = {7, 19};
    rot[19] = {18, 20, 7};  // P3
    run3(20, 19, 23);
    rot[23] = {22, 24, 3};  // A4
    run3(24, 23, 8);
    rot[27] = {8, 28};
    rot[28] = {27, 29, 8};  // P5
    run3(29, 28, 32);
    rot[32] = {31, 33, 5};  // A6
    run3(33, 32, 6);
    return PlaneGraph::build(rot, 34);
}

// A 6-face adjacent to two triangles sharing the 5-vertex v2 = 1: the s/6
// rule pays 2/6 in one transfer. Hexagon v1..v6 = 0..5, apexes x=6, y=7.
inline PlaneGraph shared_corner_fixture() {
    std::vector<std::vector<int>> rot(30);
    rot[0] = {6, 1, 5};            // v1: x v2 v6
    rot[1] = {0, 6, 11, 7, 2};     // v2: v1 x A y v3
    rot[2] = {1, 7, 3};            // v3: v2 y v4
    rot[3] = {4, 2, 18};           // v4: v5 v3 B4
    rot[4] = {5, 3, 22};           // v5: v6 v4 B5
    rot[5] = {26, 0, 4};           // v6: B6 v1 v5
    rot[6] = {29, 8, 1, 0};        // x: prev next v2 v1
    rot[7] = {14, 15, 2, 1};       // y: prev next v3 v2
    auto run3 = [&](int first, int before, int after) {
        rot[first] = {before, first + 1};
        rot[first + 1] = {first, first + 2};
        rot[first + 2] = {first + 1, after};
    };
    run3(8, 6, 11);
    rot[11] = {10, 12, 1};  // A: prev next v2
    run3(12, 11, 7);
    run3(15, 7, 18);
    rot[18] = {17, 19, 3};  // B4
    run3(19, 18, 22);
    rot[22] = {21, 23, 4};  // B5
    run3(23, 22, 26);
    rot[26] = {25, 27, 5};  // B6
    run3(27, 26, 6);
    return PlaneGraph::build(rot, 28);
}

// The truncated tetrahedron: cubic, 2-connected, faces of degree 3 and 6
// only, no 4- or 5-cycles. Every edge joins two 3-vertices, so detect walks
// the full priority chain down to AdjacentThrees.
inline PlaneGraph truncated_tetrahedron_fixture(int root = 0) {
    std::vector<std::vector<int>> rot = {{5, 1, 2},  {9, 2, 0},  {6, 0, 1},  {8, 4, 5},
                                         {10, 5, 3}, {0, 3, 4},  {2, 7, 8},  {11, 8, 6},
                                         {3, 6, 7},  {1, 10, 11}, {4, 11, 9}, {7, 9, 10}};
    return PlaneGraph::build(rot, root);
}

// Two hexagons sharing a vertex: a pendant-block fixture above the base-case
// threshold (l=5).
inline PlaneGraph two_hexagons_fixture() {
    std::vector<std::vector<int>> rot(11);
    // hexagon A: 0..5, hexagon B: 0,6,7,8,9,10 sharing vertex 0
    rot[0] = {1, 5, 6, 10};
    for (int i = 1; i <= 5; ++i) rot[i] = {(i + 1) % 6, (i + 5) % 6};
    rot[1] = {2, 0};
    rot[5] = {0, 4};
    rot[6] = {7, 0};
    for (int i = 7; i <= 9; ++i) rot[i] = {i + 1, i - 1};
    rot[10] = {0, 9};
    return PlaneGraph::build(rot, 3);
}

}  // namespace atctest
