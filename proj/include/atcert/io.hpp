#pragma once

#include <string>
#include <utility>
#include <vector>

#include "atcert/plane_graph.hpp"

namespace atcert {

// rotsys v1:
//   line 1: n l root outer_hint     (outer_hint: '-' or comma-separated
//                                    boundary vertex sequence)
//   then n lines: "v: u1 u2 ... ud" in counterclockwise order.
struct RotsysFile {
    PlaneGraph graph;
    int l = 0;  // class parameter recorded in the file
};

RotsysFile parse_rotsys(const std::string& text);
std::string write_rotsys(const PlaneGraph& g, int l);

// Orientation files: one arc per line, "u>v".
std::vector<std::pair<int, int>> parse_orientation(const std::string& text);
std::string write_orientation(const std::vector<std::pair<int, int>>& arcs);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace atcert
