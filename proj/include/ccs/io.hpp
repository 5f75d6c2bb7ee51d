#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ccs/ccs_graph.hpp"
#include "ccs/graph.hpp"

namespace ccs::io {

enum class GraphFormat { json, edgelist, graph6, dimacs };

const char* format_name(GraphFormat format);
std::optional<GraphFormat> format_from_name(std::string_view name);
// By extension: .json, .el/.edgelist/.txt, .g6/.graph6, .col/.dimacs
std::optional<GraphFormat> format_from_path(std::string_view path);

// --- emitters (canonical output, trailing newline) ---

std::string to_json(const Graph& g);
std::string to_json(const CcsGraph& g); // includes cube metadata
std::string to_edgelist(const Graph& g); // "u v" per line, 0-based, sorted
std::string to_graph6(const Graph& g);
std::string to_dimacs(const Graph& g); // "p edge n m" + 1-based "e u v" lines

// --- parsers (throw GraphError with kind parse_error on malformed input) ---

struct ParsedDocument {
    Graph graph;
    std::optional<CcsGraph> ccs; // set when the JSON carried cube metadata
};

ParsedDocument parse_json(std::string_view text);
Graph parse_edgelist(std::string_view text);
Graph parse_graph6(std::string_view text);
Graph parse_dimacs(std::string_view text);

ParsedDocument parse_text(std::string_view text, GraphFormat format);
ParsedDocument load_graph_file(const std::string& path,
                               std::optional<GraphFormat> format = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace ccs::io
