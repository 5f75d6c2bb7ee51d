#pragma once

// Shared test helpers: small graph builders and an independent
// Floyd-Warshall distance reference used to cross-check the BFS oracle.

#include <vector>

#include "ccs/graph.hpp"

namespace testutil {

inline constexpr long kFwInf = 1'000'000;

inline std::vector<std::vector<long>> floyd_warshall(const ccs::Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<long>> d(n, std::vector<long>(n, kFwInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline ccs::Graph path(std::size_t k) {
    std::vector<ccs::Edge> edges;
    for (ccs::VertexId v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    return ccs::Graph::build(k, std::move(edges));
}

inline ccs::Graph cycle(std::size_t k) {
    std::vector<ccs::Edge> edges;
    for (ccs::VertexId v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    edges.push_back(ccs::make_edge(0, static_cast<ccs::VertexId>(k - 1)));
    return ccs::Graph::build(k, std::move(edges));
}

inline ccs::Graph complete(std::size_t k) {
    std::vector<ccs::Edge> edges;
    for (ccs::VertexId u = 0; u < k; ++u)
        for (ccs::VertexId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return ccs::Graph::build(k, std::move(edges));
}

// vertex 0 is the center
inline ccs::Graph star(std::size_t leaves) {
    std::vector<ccs::Edge> edges;
    for (ccs::VertexId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return ccs::Graph::build(leaves + 1, std::move(edges));
}

} // namespace testutil
