#pragma once

#include <limits>

#include "ccs/graph.hpp"

namespace ccs {

// Sentinel for unreachable pairs. Never used in arithmetic; connected
// inputs (every CCS(n)) never produce it.
inline constexpr Dist kUnreachable = std::numeric_limits<Dist>::max();

/// All-pairs shortest-path distances of an unweighted graph, one BFS per
/// source. Immutable after construction and safe to share across threads.
class DistanceOracle {
public:
    DistanceOracle() = default;

    Dist operator()(VertexId u, VertexId v) const {
        return matrix_[static_cast<std::size_t>(u) * vertex_count_ + v];
    }

    std::span<const Dist> row(VertexId u) const {
        return {matrix_.data() + static_cast<std::size_t>(u) * vertex_count_,
                vertex_count_};
    }

    std::size_t vertex_count() const { return vertex_count_; }

private:
    friend DistanceOracle all_pairs(const Graph&);

    std::size_t vertex_count_ = 0;
    std::vector<Dist> matrix_;
};

// Exact shortest-path distances from one source; kUnreachable where no path.
std::vector<Dist> bfs_distances(const Graph& g, VertexId source);

// Runs bfs_distances from every source. Sources may be computed in parallel;
// the result is schedule-independent.
DistanceOracle all_pairs(const Graph& g);

// d(e, h) = min over the endpoints of e of their distance to h.
inline Dist edge_vertex_distance(const DistanceOracle& oracle, Edge e, VertexId h) {
    Dist da = oracle(e.first, h);
    Dist db = oracle(e.second, h);
    return da < db ? da : db;
}

} // namespace ccs
