#include "ccs/random_graph.hpp"

#include <algorithm>
#include <random>

namespace ccs {

Graph random_connected_graph(std::size_t vertices, std::size_t edges,
                             std::uint64_t seed) {
    if (vertices == 0)
        throw GraphError(ErrorKind::guard_exceeded, "need at least one vertex");
    std::size_t max_edges = vertices * (vertices - 1) / 2;
    if (edges + 1 < vertices || edges > max_edges)
        throw GraphError(ErrorKind::guard_exceeded,
                         "edge count must lie in [vertices-1, C(vertices,2)]");

    std::mt19937_64 rng(seed);
    std::vector<Edge> chosen;
    chosen.reserve(edges);
    for (VertexId v = 1; v < vertices; ++v) {
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        chosen.push_back(make_edge(pick(rng), v));
    }

    std::vector<Edge> rest;
    rest.reserve(max_edges - chosen.size());
    std::sort(chosen.begin(), chosen.end());
    for (VertexId u = 0; u < vertices; ++u)
        for (VertexId v = u + 1; v < vertices; ++v)
            if (!std::binary_search(chosen.begin(), chosen.end(), Edge{u, v}))
                rest.emplace_back(u, v);
    std::shuffle(rest.begin(), rest.end(), rng);
    rest.resize(edges - chosen.size());
    chosen.insert(chosen.end(), rest.begin(), rest.end());
    return Graph::build(vertices, std::move(chosen));
}

} // namespace ccs
