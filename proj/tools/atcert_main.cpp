#include <cstdio>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "atcert/cli_core.hpp"
#include "atcert/errors.hpp"
#include "atcert/io.hpp"

using namespace atcert;

int main(int argc, char** argv) {
    CLI::App app{"Alon-Tarsi matching certificates for planar graphs without 4- and l-cycles"};
    app.require_subcommand(1);
    app.fallthrough();

    int l = 0;
    int max_n = 9;
    int cap_edges = 32;
    int jobs = 0;
    unsigned long long seed = 0;
    long long sample = 0;
    std::string format = "json";
    app.add_option("--l", l, "class parameter (5, 6 or 7)")->check(CLI::IsMember({5, 6, 7}));
    app.add_option("--max-n", max_n, "largest vertex count for enumeration");
    app.add_option("--cap-edges", cap_edges, "edge cap for exact enumeration");
    app.add_option("--seed", seed, "seed for sampled modes");
    app.add_option("--sample", sample, "sample size (0 = exhaustive)");
    app.add_option("--jobs", jobs, "worker threads for batch runs (0 = default)");
    app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string graph_path, orient_path, out_dir = "corpus", dot_path, orient_out;
    auto* analyze = app.add_subcommand("analyze", "graph summary and exact AT number");
    analyze->add_option("file", graph_path, "rotsys file")->required();
    analyze->add_option("--dot", dot_path, "also write a DOT rendering here");
    auto* verify = app.add_subcommand("verify-orientation", "check a .orient file for goodness");
    verify->add_option("file", graph_path, "rotsys file")->required();
    verify->add_option("orientation", orient_path, ".orient file")->required();
    auto* det = app.add_subcommand("detect", "find the first reducible configuration");
    det->add_option("file", graph_path, "rotsys file")->required();
    auto* ext = app.add_subcommand("extract", "matching + good orientation certificate");
    ext->add_option("file", graph_path, "rotsys file")->required();
    ext->add_option("--orient-out", orient_out, "write the orientation as u>v lines here");
    auto* dis = app.add_subcommand("discharge", "exact charges, transfers and audit");
    dis->add_option("file", graph_path, "rotsys file")->required();
    auto* enu = app.add_subcommand("enumerate", "write the class corpus to a directory");
    enu->add_option("--out", out_dir, "output directory");
    auto* bat = app.add_subcommand("certify-batch", "enumerate, extract, verify and audit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Caps caps;
    caps.diff_edge_cap = cap_edges;

    try {
        cli::Json rep;
        if (analyze->parsed()) {
            std::string text = read_file(graph_path);
            rep = cli::analyze_report(text, caps);
            if (!dot_path.empty()) write_file(dot_path, parse_rotsys(text).graph.to_dot());
        } else if (verify->parsed()) {
            rep = cli::verify_orientation_report(read_file(graph_path), read_file(orient_path),
                                                 caps);
        } else if (det->parsed()) {
            rep = cli::detect_report(read_file(graph_path), l);
        } else if (ext->parsed()) {
            std::string text = read_file(graph_path);
            rep = cli::extract_report(text, l, caps);
            if (!orient_out.empty()) {
                std::vector<std::pair<int, int>> arcs;
                for (const auto& a : rep["orientation"])
                    arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
                write_file(orient_out, write_orientation(arcs));
            }
        } else if (dis->parsed()) {
            rep = cli::discharge_report(read_file(graph_path), l);
        } else if (enu->parsed()) {
            GeneratorSpec spec{max_n, l == 0 ? 5 : l, 1, seed, sample};
            rep = cli::enumerate_manifest(spec, out_dir);
        } else if (bat->parsed()) {
            GeneratorSpec spec{max_n, l == 0 ? 5 : l, 1, seed, sample};
            rep = cli::certify_batch_report(spec, caps, jobs);
        }
        std::cout << cli::render(rep, format);
        return cli::report_ok(rep) ? 0 : 1;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
