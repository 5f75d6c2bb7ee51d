#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ccs {

using VertexId = std::uint32_t;
using Dist = std::uint16_t;

// Undirected edge, stored canonically as (min, max).
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

enum class ErrorKind {
    self_loop,
    duplicate_edge,
    vertex_out_of_range,
    not_an_edge,
    invalid_landmarks,
    not_connected,
    guard_exceeded,
    unresolvable_pair,
    parse_error,
};

class GraphError : public std::runtime_error {
public:
    GraphError(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Immutable simple undirected graph with dense 0-based vertex ids.
/// The edge list is kept sorted by (min, max), so edge indices are
/// deterministic and identical across runs.
class Graph {
public:
    Graph() = default;

    // Validates and canonicalizes: rejects self-loops, duplicate edges and
    // out-of-range endpoints with distinct error kinds.
    static Graph build(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        check_vertex(v);
        return adjacency_[v];
    }

    std::size_t degree(VertexId v) const {
        check_vertex(v);
        return adjacency_[v].size();
    }

    bool has_edge(VertexId u, VertexId v) const;

    // Position of (u,v) in the canonical sorted edge list.
    std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

    void check_vertex(VertexId v) const {
        if (v >= vertex_count_)
            throw GraphError(ErrorKind::vertex_out_of_range,
                             "vertex " + std::to_string(v) + " out of range (n=" +
                                 std::to_string(vertex_count_) + ")");
    }

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
};

bool is_connected(const Graph& g);

} // namespace ccs
