#include "ccs/distance.hpp"

#include <algorithm>
#include <thread>

namespace ccs {

namespace {

// BFS into a caller-provided row of the distance matrix.
void bfs_into(const Graph& g, VertexId source, Dist* out,
              std::vector<VertexId>& queue) {
    std::fill(out, out + g.vertex_count(), kUnreachable);
    queue.clear();
    queue.push_back(source);
    out[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId v = queue[head];
        Dist next = static_cast<Dist>(out[v] + 1);
        for (VertexId w : g.neighbors(v)) {
            if (out[w] == kUnreachable) {
                out[w] = next;
                queue.push_back(w);
            }
        }
    }
}

void check_distance_width(const Graph& g) {
    if (g.vertex_count() >= kUnreachable)
        throw GraphError(ErrorKind::guard_exceeded,
                         "graph too large for 16-bit distances");
}

} // namespace

std::vector<Dist> bfs_distances(const Graph& g, VertexId source) {
    g.check_vertex(source);
    check_distance_width(g);
    std::vector<Dist> dist(g.vertex_count());
    std::vector<VertexId> queue;
    queue.reserve(g.vertex_count());
    bfs_into(g, source, dist.data(), queue);
    return dist;
}

DistanceOracle all_pairs(const Graph& g) {
    check_distance_width(g);
    const std::size_t n = g.vertex_count();
    DistanceOracle oracle;
    oracle.vertex_count_ = n;
    oracle.matrix_.resize(n * n);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<VertexId> queue;
        queue.reserve(n);
        for (std::size_t s = begin; s < end; ++s)
            bfs_into(g, static_cast<VertexId>(s), oracle.matrix_.data() + s * n,
                     queue);
    };

    // Each source writes its own row, so any split of the source range
    // produces the same matrix.
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = hw ? hw : 1;
    if (n < 128 || workers <= 1) {
        run_range(0, n);
        return oracle;
    }
    workers = std::min(workers, n);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
        std::size_t begin = t * chunk;
        std::size_t end = std::min(begin + chunk, n);
        if (begin >= end) break;
        threads.emplace_back(run_range, begin, end);
    }
    for (auto& th : threads) th.join();
    return oracle;
}

} // namespace ccs
