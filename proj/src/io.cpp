#include "atcert/io.hpp"

#include <fstream>
#include <sstream>

#include "atcert/errors.hpp"

namespace atcert {

namespace {
std::vector<int> parse_int_list(const std::string& s, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, sep)) {
        if (item.empty()) continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + item + "'");
        }
    }
    return out;
}
}  // namespace

RotsysFile parse_rotsys(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    // header
    int n = -1, l = 0, root = -1;
    std::string outer;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream hs(line);
        if (!(hs >> n >> l >> root >> outer)) throw ParseError("rotsys: bad header line");
        break;
    }
    if (n <= 0) throw ParseError("rotsys: missing or empty header");
    if (l != 5 && l != 6 && l != 7) throw ParseError("rotsys: l must be 5, 6 or 7");

    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n, 0);
    int rows = 0;
    while (rows < n && std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("rotsys: vertex line missing ':'");
        int v;
        try {
            v = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw ParseError("rotsys: bad vertex id");
        }
        if (v < 0 || v >= n) throw ParseError("rotsys: vertex id out of range");
        if (seen[v]) throw ParseError("rotsys: duplicate vertex line");
        seen[v] = 1;
        std::istringstream vs(line.substr(colon + 1));
        int u;
        while (vs >> u) rot[v].push_back(u);
        ++rows;
    }
    if (rows != n) throw ParseError("rotsys: expected " + std::to_string(n) + " vertex lines");

    std::vector<int> hint;
    if (outer != "-") hint = parse_int_list(outer, ',');

    RotsysFile out{PlaneGraph::build(std::move(rot), root, hint), l};
    return out;
}

std::string write_rotsys(const PlaneGraph& g, int l) {
    std::ostringstream os;
    os << g.vertex_count() << " " << l << " " << g.root() << " ";
    const Face& f = g.face(g.outer_face());
    auto bw = f.walk_vertices();
    for (size_t i = 0; i < bw.size(); ++i) os << (i ? "," : "") << bw[i];
    if (bw.empty()) os << "-";
    os << "\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << v << ":";
        for (int u : g.rotation()[v]) os << " " << u;
        os << "\n";
    }
    return os.str();
}

std::vector<std::pair<int, int>> parse_orientation(const std::string& text) {
    std::vector<std::pair<int, int>> arcs;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto gt = line.find('>');
        if (gt == std::string::npos) throw ParseError("orientation: line missing '>'");
        try {
            int u = std::stoi(line.substr(0, gt));
            int v = std::stoi(line.substr(gt + 1));
            arcs.emplace_back(u, v);
        } catch (const std::exception&) {
            throw ParseError("orientation: bad arc line '" + line + "'");
        }
    }
    return arcs;
}

std::string write_orientation(const std::vector<std::pair<int, int>>& arcs) {
    std::ostringstream os;
    for (const auto& a : arcs) os << a.first << ">" << a.second << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    f << content;
}

}  // namespace atcert
