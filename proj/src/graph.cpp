#include "ccs/graph.hpp"

#include <algorithm>

namespace ccs {

Graph Graph::build(std::size_t vertex_count, std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u >= vertex_count || v >= vertex_count)
            throw GraphError(ErrorKind::vertex_out_of_range,
                             "edge endpoint out of range: (" + std::to_string(u) +
                                 ", " + std::to_string(v) + ")");
        if (u == v)
            throw GraphError(ErrorKind::self_loop,
                             "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw GraphError(ErrorKind::duplicate_edge,
                         "duplicate edge (" + std::to_string(dup->first) + ", " +
                             std::to_string(dup->second) + ")");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.adjacency_.resize(vertex_count);
    for (const auto& [u, v] : edges) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    g.edges_ = std::move(edges);
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<std::size_t> Graph::edge_index(VertexId u, VertexId v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == g.vertex_count();
}

} // namespace ccs
