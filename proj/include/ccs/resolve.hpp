#pragma once

#include "ccs/distance.hpp"
#include "ccs/graph.hpp"

namespace ccs {

// Ordered list of distinct landmark vertex ids.
using LandmarkSet = std::vector<VertexId>;

// Distance vector of a vertex or edge to each landmark, in landmark order.
using Representation = std::vector<Dist>;

struct VertexResolveVerdict {
    bool resolving = false;
    // Lexicographically smallest colliding vertex pair when not resolving.
    std::optional<std::pair<VertexId, VertexId>> witness;
};

struct EdgeResolveVerdict {
    bool resolving = false;
    // Lexicographically smallest colliding edge pair (by canonical edge
    // order) when not resolving.
    std::optional<std::pair<Edge, Edge>> witness;
};

// Throws invalid_landmarks on duplicates, vertex_out_of_range on bad ids.
void validate_landmarks(std::size_t vertex_count, const LandmarkSet& landmarks);

Representation vertex_representation(const DistanceOracle& oracle, VertexId u,
                                     const LandmarkSet& landmarks);

// e must be an edge of the graph the oracle was built from (d(u,v) == 1).
Representation edge_representation(const DistanceOracle& oracle, Edge e,
                                   const LandmarkSet& landmarks);

VertexResolveVerdict is_vertex_resolving(const DistanceOracle& oracle,
                                         const LandmarkSet& landmarks);

EdgeResolveVerdict is_edge_resolving(const DistanceOracle& oracle,
                                     std::span<const Edge> edges,
                                     const LandmarkSet& landmarks);

// Groups of >= 2 items sharing a representation, ordered by smallest member.
std::vector<std::vector<VertexId>> vertex_collision_groups(
    const DistanceOracle& oracle, const LandmarkSet& landmarks);

std::vector<std::vector<Edge>> edge_collision_groups(
    const DistanceOracle& oracle, std::span<const Edge> edges,
    const LandmarkSet& landmarks);

} // namespace ccs
