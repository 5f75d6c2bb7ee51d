#pragma once

#include <cstdint>

#include "ccs/graph.hpp"

namespace ccs {

// Seeded random connected graph: a random attachment tree plus extra edges
// drawn uniformly from the remaining pairs. Deterministic for a fixed seed.
// Requires vertices >= 1 and tree_size-1 <= edges <= C(vertices, 2).
Graph random_connected_graph(std::size_t vertices, std::size_t edges,
                             std::uint64_t seed);

} // namespace ccs
