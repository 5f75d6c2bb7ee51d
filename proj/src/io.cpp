#include "ccs/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ccs::io {

using nlohmann::json;

namespace {

// Desk-scale ceiling for parsed inputs; CCS(6) has ~180k vertices.
constexpr std::size_t kMaxParsedVertices = 10'000'000;

[[noreturn]] void parse_fail(const std::string& message) {
    throw GraphError(ErrorKind::parse_error, message);
}

void check_parsed_order(std::size_t vertex_count) {
    if (vertex_count > kMaxParsedVertices)
        parse_fail("vertex count " + std::to_string(vertex_count) +
                   " exceeds the input size limit");
}

json edges_to_json(const Graph& g) {
    json arr = json::array();
    for (const auto& [u, v] : g.edges()) arr.push_back(json::array({u, v}));
    return arr;
}

std::vector<Edge> edges_from_json(const json& arr) {
    if (!arr.is_array()) parse_fail("\"edges\" must be an array");
    std::vector<Edge> edges;
    edges.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2) parse_fail("malformed edge entry");
        edges.emplace_back(item[0].get<VertexId>(), item[1].get<VertexId>());
    }
    return edges;
}

std::optional<CubeRole> role_from_name(std::string_view name) {
    if (name == "central") return CubeRole::central;
    if (name == "intermediate") return CubeRole::intermediate;
    if (name == "outermost") return CubeRole::outermost;
    return std::nullopt;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

} // namespace

const char* format_name(GraphFormat format) {
    switch (format) {
        case GraphFormat::json: return "json";
        case GraphFormat::edgelist: return "edgelist";
        case GraphFormat::graph6: return "graph6";
        case GraphFormat::dimacs: return "dimacs";
    }
    return "?";
}

std::optional<GraphFormat> format_from_name(std::string_view name) {
    if (name == "json") return GraphFormat::json;
    if (name == "edgelist" || name == "el") return GraphFormat::edgelist;
    if (name == "graph6" || name == "g6") return GraphFormat::graph6;
    if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
    return std::nullopt;
}

std::optional<GraphFormat> format_from_path(std::string_view path) {
    auto dot = path.rfind('.');
    if (dot == std::string_view::npos) return std::nullopt;
    auto ext = path.substr(dot + 1);
    if (ext == "json") return GraphFormat::json;
    if (ext == "el" || ext == "edgelist" || ext == "txt")
        return GraphFormat::edgelist;
    if (ext == "g6" || ext == "graph6") return GraphFormat::graph6;
    if (ext == "col" || ext == "dimacs") return GraphFormat::dimacs;
    return std::nullopt;
}

std::string to_json(const Graph& g) {
    json j;
    j["format"] = "graph/1";
    j["vertex_count"] = g.vertex_count();
    j["edges"] = edges_to_json(g);
    return dump(j);
}

std::string to_json(const CcsGraph& g) {
    json j;
    j["format"] = "ccs/1";
    j["n"] = g.n;
    j["vertex_count"] = g.graph.vertex_count();
    j["edges"] = edges_to_json(g.graph);
    json cubes = json::array();
    for (const auto& cube : g.cubes) {
        json rec;
        rec["cube_id"] = cube.cube_id;
        rec["level"] = cube.level;
        rec["role"] = cube_role_name(cube.role);
        if (cube.attachment_vertex) rec["attachment_vertex"] = *cube.attachment_vertex;
        if (cube.parent_cube) rec["parent_cube"] = *cube.parent_cube;
        if (cube.bridge_edge)
            rec["bridge_edge"] =
                json::array({cube.bridge_edge->first, cube.bridge_edge->second});
        cubes.push_back(rec);
    }
    j["cubes"] = cubes;
    return dump(j);
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        parse_fail("graph6 export limited to 258047 vertices");
    }
    // upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
    unsigned bits = 0, value = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            value = (value << 1) |
                    (g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j))
                         ? 1u
                         : 0u);
            if (++bits == 6) {
                out.push_back(static_cast<char>(value + 63));
                bits = 0;
                value = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>((value << (6 - bits)) + 63));
    out.push_back('\n');
    return out;
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

ParsedDocument parse_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        parse_fail(std::string("invalid JSON: ") + err.what());
    }
    try {
        if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges"))
            parse_fail("JSON graph needs \"vertex_count\" and \"edges\"");
        auto vertex_count = j["vertex_count"].get<std::size_t>();
        check_parsed_order(vertex_count);
        Graph graph = Graph::build(vertex_count, edges_from_json(j["edges"]));

        ParsedDocument doc{std::move(graph), std::nullopt};
        if (j.contains("cubes")) {
            CcsGraph ccs;
            ccs.graph = doc.graph;
            ccs.n = j.at("n").get<unsigned>();
            for (const auto& rec : j.at("cubes")) {
                CubeRecord cube;
                cube.cube_id = rec.at("cube_id").get<std::uint32_t>();
                cube.level = rec.at("level").get<std::uint32_t>();
                auto role = role_from_name(rec.at("role").get<std::string>());
                if (!role) parse_fail("unknown cube role");
                cube.role = *role;
                if (rec.contains("attachment_vertex"))
                    cube.attachment_vertex = rec["attachment_vertex"].get<VertexId>();
                if (rec.contains("parent_cube"))
                    cube.parent_cube = rec["parent_cube"].get<std::uint32_t>();
                if (rec.contains("bridge_edge"))
                    cube.bridge_edge = Edge{rec["bridge_edge"][0].get<VertexId>(),
                                            rec["bridge_edge"][1].get<VertexId>()};
                ccs.cubes.push_back(cube);
            }
            if (ccs.cubes.size() * 8 != ccs.graph.vertex_count())
                parse_fail("cube records do not cover the vertex set");
            doc.ccs = std::move(ccs);
        }
        return doc;
    } catch (const json::exception& err) {
        parse_fail(std::string("invalid graph document: ") + err.what());
    }
}

Graph parse_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Edge> edges;
    VertexId max_vertex = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        long long u, v;
        if (!(fields >> u)) continue; // blank or comment-only line
        if (!(fields >> v))
            parse_fail("edge list line " + std::to_string(line_no) +
                       ": expected two vertex ids");
        std::string rest;
        if (fields >> rest)
            parse_fail("edge list line " + std::to_string(line_no) +
                       ": trailing tokens");
        if (u < 0 || v < 0)
            parse_fail("edge list line " + std::to_string(line_no) +
                       ": negative vertex id");
        if (static_cast<std::size_t>(u) > kMaxParsedVertices ||
            static_cast<std::size_t>(v) > kMaxParsedVertices)
            parse_fail("edge list line " + std::to_string(line_no) +
                       ": vertex id exceeds the input size limit");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        max_vertex = std::max({max_vertex, edges.back().first, edges.back().second});
    }
    std::size_t vertex_count = edges.empty() ? 0 : std::size_t{max_vertex} + 1;
    check_parsed_order(vertex_count);
    return Graph::build(vertex_count, std::move(edges));
}

Graph parse_graph6(std::string_view text) {
    // strip optional header and surrounding whitespace
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                             text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) parse_fail("empty graph6 input");

    std::size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= text.size()) parse_fail("graph6 input truncated");
        unsigned c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) parse_fail("graph6 byte out of range");
        return c - 63;
    };

    std::size_t n;
    unsigned first = next();
    if (first < 63) {
        n = first;
    } else {
        unsigned a = next();
        if (a == 63) { // 126 126: 36-bit order
            std::size_t value = 0;
            for (int i = 0; i < 6; ++i) value = (value << 6) | next();
            n = value;
        } else {
            std::size_t value = a;
            for (int i = 0; i < 2; ++i) value = (value << 6) | next();
            n = value;
        }
    }

    check_parsed_order(n);
    std::vector<Edge> edges;
    unsigned bits = 0, value = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (bits == 0) {
                value = next();
                bits = 6;
            }
            --bits;
            if ((value >> bits) & 1)
                edges.emplace_back(static_cast<VertexId>(i),
                                   static_cast<VertexId>(j));
        }
    if (pos != text.size()) parse_fail("trailing bytes after graph6 data");
    return Graph::build(n, std::move(edges));
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t vertex_count = 0, declared_edges = 0;
    bool have_problem = false;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "p") {
            std::string kind;
            if (!(fields >> kind >> vertex_count >> declared_edges) ||
                (kind != "edge" && kind != "col"))
                parse_fail("malformed DIMACS problem line");
            have_problem = true;
        } else if (tag == "e") {
            long long u, v;
            if (!(fields >> u >> v) || u < 1 || v < 1)
                parse_fail("malformed DIMACS edge at line " +
                           std::to_string(line_no));
            if (static_cast<std::size_t>(u) > kMaxParsedVertices ||
                static_cast<std::size_t>(v) > kMaxParsedVertices)
                parse_fail("DIMACS vertex id exceeds the input size limit");
            edges.emplace_back(static_cast<VertexId>(u - 1),
                               static_cast<VertexId>(v - 1));
        } else if (!tag.empty()) {
            parse_fail("unknown DIMACS line tag '" + tag + "'");
        }
    }
    if (!have_problem) parse_fail("missing DIMACS problem line");
    check_parsed_order(vertex_count);
    if (edges.size() != declared_edges)
        parse_fail("DIMACS edge count mismatch: declared " +
                   std::to_string(declared_edges) + ", found " +
                   std::to_string(edges.size()));
    return Graph::build(vertex_count, std::move(edges));
}

ParsedDocument parse_text(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::json: return parse_json(text);
        case GraphFormat::edgelist: return {parse_edgelist(text), std::nullopt};
        case GraphFormat::graph6: return {parse_graph6(text), std::nullopt};
        case GraphFormat::dimacs: return {parse_dimacs(text), std::nullopt};
    }
    parse_fail("unknown format");
}

ParsedDocument load_graph_file(const std::string& path,
                               std::optional<GraphFormat> format) {
    auto text = read_file(path);
    if (!format) format = format_from_path(path);
    if (!format) {
        // sniff: JSON object, DIMACS problem line, else edge list vs graph6
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{')
            format = GraphFormat::json;
        else if (text.rfind(">>graph6<<", 0) == 0)
            format = GraphFormat::graph6;
        else if (text.find("p edge") != std::string::npos ||
                 text.find("p col") != std::string::npos)
            format = GraphFormat::dimacs;
        else if (text.find_first_of("0123456789") != std::string::npos &&
                 text.find_first_not_of("0123456789 \t\r\n#") == std::string::npos)
            format = GraphFormat::edgelist;
        else
            format = GraphFormat::graph6;
    }
    return parse_text(text, *format);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_fail("cannot open '" + path + "' for writing");
    out << content;
    if (!out) parse_fail("failed writing '" + path + "'");
}

} // namespace ccs::io
