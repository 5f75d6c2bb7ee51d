// Command-line front end: generate CCS(n), verify landmark sets, solve for
// minimum resolving sets, and run the certification suite.
//
// Exit codes: 0 success / resolving, 1 negative verdict, 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccs/certify.hpp"
#include "ccs/io.hpp"
#include "ccs/random_graph.hpp"
#include "ccs/solver.hpp"

using nlohmann::json;

namespace {

constexpr int kExitResolving = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

ccs::io::GraphFormat parse_format_flag(const std::string& name) {
    auto format = ccs::io::format_from_name(name);
    if (!format)
        throw ccs::GraphError(ccs::ErrorKind::parse_error,
                              "unknown format '" + name + "'");
    return *format;
}

ccs::Variant parse_variant_flag(const std::string& name) {
    if (name == "vertex") return ccs::Variant::vertex;
    if (name == "edge") return ccs::Variant::edge;
    throw ccs::GraphError(ccs::ErrorKind::parse_error,
                          "variant must be 'vertex' or 'edge'");
}

ccs::LandmarkSet parse_landmark_list(const std::string& text) {
    ccs::LandmarkSet landmarks;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream field(token);
        long long value;
        if (!(field >> value) || value < 0)
            throw ccs::GraphError(ccs::ErrorKind::parse_error,
                                  "bad landmark id '" + token + "'");
        std::string rest;
        if (field >> rest)
            throw ccs::GraphError(ccs::ErrorKind::parse_error,
                                  "bad landmark token '" + token + "'");
        landmarks.push_back(static_cast<ccs::VertexId>(value));
    }
    return landmarks;
}

void emit(const std::string& content, const std::string& output_path) {
    if (output_path.empty())
        std::cout << content;
    else
        ccs::io::write_file(output_path, content);
}

std::string render_graph(const ccs::CcsGraph& g, ccs::io::GraphFormat format) {
    switch (format) {
        case ccs::io::GraphFormat::json: return ccs::io::to_json(g);
        case ccs::io::GraphFormat::edgelist: return ccs::io::to_edgelist(g.graph);
        case ccs::io::GraphFormat::graph6: return ccs::io::to_graph6(g.graph);
        case ccs::io::GraphFormat::dimacs: return ccs::io::to_dimacs(g.graph);
    }
    return {};
}

json edge_to_json(const ccs::Edge& e) { return json::array({e.first, e.second}); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystal cubic carbon graphs: generation, resolvability, "
                 "exact solving, certification"};
    app.require_subcommand(1);

    // --- gen ---
    auto* gen = app.add_subcommand("gen", "generate CCS(n) and write it out");
    unsigned gen_n = 1;
    unsigned gen_guard = ccs::kDefaultMaxLevel;
    std::string gen_format = "json", gen_output;
    gen->add_option("-n,--level", gen_n, "level n of CCS(n)")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--format", gen_format, "json|edgelist|graph6|dimacs");
    gen->add_option("-o,--output", gen_output, "output file (default stdout)");
    gen->add_option("--max-level", gen_guard,
                    "override the generation size guard");

    // --- random ---
    auto* rnd = app.add_subcommand(
        "random", "generate a seeded random connected graph");
    std::size_t rnd_vertices = 8, rnd_edges = 12;
    std::uint64_t rnd_seed = 1;
    std::string rnd_format = "edgelist", rnd_output;
    rnd->add_option("--vertices", rnd_vertices, "vertex count")->required();
    rnd->add_option("--edges", rnd_edges, "edge count")->required();
    rnd->add_option("--seed", rnd_seed, "RNG seed (default 1)");
    rnd->add_option("--format", rnd_format, "edgelist|graph6|dimacs|json");
    rnd->add_option("-o,--output", rnd_output, "output file (default stdout)");

    // --- verify ---
    auto* verify = app.add_subcommand(
        "verify", "check whether a landmark set resolves a graph");
    std::string verify_graph, verify_landmarks, verify_landmarks_file;
    std::string verify_variant = "edge", verify_format;
    bool verify_json = false;
    verify->add_option("graph", verify_graph, "graph file")->required();
    verify->add_option("--landmarks", verify_landmarks,
                       "comma-separated landmark ids");
    verify->add_option("--landmarks-file", verify_landmarks_file,
                       "file of whitespace-separated landmark ids");
    verify->add_option("--variant", verify_variant, "vertex|edge");
    verify->add_option("--format", verify_format, "input format override");
    verify->add_flag("--json", verify_json, "JSON report");

    // --- solve ---
    auto* solve = app.add_subcommand(
        "solve", "compute a minimum (or greedy) resolving set");
    std::string solve_graph, solve_variant = "edge", solve_format;
    std::string solve_matrix_path;
    bool solve_exact_flag = false, solve_greedy_flag = false, solve_json = false;
    std::uint64_t solve_nodes = 0;
    double solve_time = 0;
    std::size_t solve_guard = 64;
    solve->add_option("graph", solve_graph, "graph file")->required();
    solve->add_option("--variant", solve_variant, "vertex|edge");
    solve->add_flag("--exact", solve_exact_flag, "exact branch and bound (default)");
    solve->add_flag("--greedy", solve_greedy_flag, "greedy cover only");
    solve->add_option("--node-budget", solve_nodes, "search node limit (0 = off)");
    solve->add_option("--time-budget", solve_time, "seconds (0 = off)");
    solve->add_option("--exact-guard", solve_guard,
                      "max vertices admitted to exact search");
    solve->add_option("--export-matrix", solve_matrix_path,
                      "write the distinguishing matrix (hitting set format)");
    solve->add_option("--format", solve_format, "input format override");
    solve->add_flag("--json", solve_json, "JSON report");

    // --- certify ---
    auto* certify = app.add_subcommand(
        "certify", "re-check structural counts and resolvability bounds");
    unsigned cert_n_max = 2;
    bool cert_json = false, cert_runtime = false;
    std::string cert_output;
    certify->add_option("--n-max", cert_n_max, "largest level to certify")
        ->required()
        ->check(CLI::PositiveNumber);
    certify->add_flag("--json", cert_json, "JSON report");
    certify->add_flag("--runtime", cert_runtime, "include runtimes in JSON");
    certify->add_option("-o,--output", cert_output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*gen) {
            auto g = ccs::generate_ccs(gen_n, gen_guard);
            emit(render_graph(g, parse_format_flag(gen_format)), gen_output);
            return kExitResolving;
        }

        if (*rnd) {
            auto graph = ccs::random_connected_graph(rnd_vertices, rnd_edges,
                                                     rnd_seed);
            auto format = parse_format_flag(rnd_format);
            std::string content;
            switch (format) {
                case ccs::io::GraphFormat::json:
                    content = ccs::io::to_json(graph);
                    break;
                case ccs::io::GraphFormat::edgelist:
                    content = ccs::io::to_edgelist(graph);
                    break;
                case ccs::io::GraphFormat::graph6:
                    content = ccs::io::to_graph6(graph);
                    break;
                case ccs::io::GraphFormat::dimacs:
                    content = ccs::io::to_dimacs(graph);
                    break;
            }
            emit(content, rnd_output);
            return kExitResolving;
        }

        if (*verify) {
            std::optional<ccs::io::GraphFormat> format;
            if (!verify_format.empty()) format = parse_format_flag(verify_format);
            auto doc = ccs::io::load_graph_file(verify_graph, format);

            ccs::LandmarkSet landmarks;
            if (!verify_landmarks_file.empty()) {
                auto text = ccs::io::read_file(verify_landmarks_file);
                for (auto& c : text)
                    if (c == '\n' || c == '\t' || c == ' ' || c == '\r') c = ',';
                landmarks = parse_landmark_list(text);
            } else if (!verify_landmarks.empty()) {
                landmarks = parse_landmark_list(verify_landmarks);
            } else {
                throw ccs::GraphError(ccs::ErrorKind::parse_error,
                                      "need --landmarks or --landmarks-file");
            }

            auto variant = parse_variant_flag(verify_variant);
            auto oracle = ccs::all_pairs(doc.graph);
            bool resolving;
            json witness;
            if (variant == ccs::Variant::vertex) {
                auto verdict = ccs::is_vertex_resolving(oracle, landmarks);
                resolving = verdict.resolving;
                if (verdict.witness)
                    witness = json::array(
                        {verdict.witness->first, verdict.witness->second});
            } else {
                auto verdict = ccs::is_edge_resolving(oracle, doc.graph.edges(),
                                                      landmarks);
                resolving = verdict.resolving;
                if (verdict.witness)
                    witness = json::array({edge_to_json(verdict.witness->first),
                                           edge_to_json(verdict.witness->second)});
            }

            if (verify_json) {
                json out = {{"variant", ccs::variant_name(variant)},
                            {"landmarks", landmarks},
                            {"resolving", resolving}};
                if (!witness.is_null()) out["witness"] = witness;
                std::cout << out.dump(2) << "\n";
            } else if (resolving) {
                std::cout << "resolving (" << landmarks.size() << " landmarks, "
                          << ccs::variant_name(variant) << " variant)\n";
            } else {
                std::cout << "NOT resolving; witness " << witness.dump() << "\n";
            }
            return resolving ? kExitResolving : kExitNegative;
        }

        if (*solve) {
            std::optional<ccs::io::GraphFormat> format;
            if (!solve_format.empty()) format = parse_format_flag(solve_format);
            auto doc = ccs::io::load_graph_file(solve_graph, format);
            auto variant = parse_variant_flag(solve_variant);
            if (solve_exact_flag && solve_greedy_flag)
                throw ccs::GraphError(ccs::ErrorKind::parse_error,
                                      "choose --exact or --greedy, not both");

            auto oracle = ccs::all_pairs(doc.graph);
            auto matrix = ccs::build_matrix(oracle, doc.graph, variant);
            if (!solve_matrix_path.empty()) {
                std::ostringstream out;
                ccs::write_hitting_set(out, matrix);
                ccs::io::write_file(solve_matrix_path, out.str());
            }

            json out = {{"variant", ccs::variant_name(variant)},
                        {"vertices", doc.graph.vertex_count()},
                        {"edges", doc.graph.edge_count()}};
            if (solve_greedy_flag) {
                auto landmarks = ccs::solve_greedy(matrix);
                bool ok = variant == ccs::Variant::vertex
                              ? ccs::is_vertex_resolving(oracle, landmarks).resolving
                              : ccs::is_edge_resolving(oracle, doc.graph.edges(),
                                                       landmarks)
                                    .resolving;
                out["method"] = "greedy";
                out["size"] = landmarks.size();
                out["landmarks"] = landmarks;
                out["verified_resolving"] = ok;
                if (solve_json)
                    std::cout << out.dump(2) << "\n";
                else
                    std::cout << "greedy " << ccs::variant_name(variant)
                              << " set: size " << landmarks.size() << " "
                              << json(landmarks).dump()
                              << (ok ? " (verified resolving)" : " (NOT resolving!)")
                              << "\n";
                return ok ? kExitResolving : kExitNegative;
            }

            ccs::SolveBudget budget;
            budget.max_nodes = solve_nodes;
            budget.time_limit_s = solve_time;
            budget.exact_vertex_guard = solve_guard;
            auto result = ccs::solve_exact(matrix, oracle, doc.graph, budget);
            out["method"] = "exact";
            out["size"] = result.landmarks.size();
            out["landmarks"] = result.landmarks;
            out["optimal"] = result.optimal;
            out["nodes_explored"] = result.nodes_explored;
            out["elapsed_s"] = result.elapsed_s;
            if (solve_json)
                std::cout << out.dump(2) << "\n";
            else
                std::cout << "minimum " << ccs::variant_name(variant)
                          << " set: size " << result.landmarks.size() << " "
                          << json(result.landmarks).dump()
                          << (result.optimal ? " (optimal, "
                                             : " (budget exhausted, ")
                          << result.nodes_explored << " nodes)\n";
            return kExitResolving;
        }

        if (*certify) {
            auto reports = ccs::certify_all(cert_n_max);
            bool all_pass = true;
            for (const auto& r : reports) all_pass = all_pass && r.pass;

            std::string content;
            if (cert_json) {
                content =
                    ccs::reports_to_json(reports, cert_runtime).dump(2) + "\n";
            } else {
                std::ostringstream out;
                for (const auto& r : reports)
                    out << ccs::report_to_text(r) << "\n";
                out << (all_pass ? "all claims certified\n"
                                 : "CERTIFICATION FAILED\n");
                content = out.str();
            }
            emit(content, cert_output);
            return all_pass ? kExitResolving : kExitNegative;
        }
    } catch (const ccs::UnresolvablePairError& e) {
        std::cerr << "unresolvable: " << e.what() << "\n";
        return kExitNegative;
    } catch (const ccs::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
