#include "ccs/resolve.hpp"

#include <algorithm>
#include <numeric>

namespace ccs {

namespace {

// Sorts item indices by (representation, index) and scans for equal runs.
// Returns groups of colliding item indices, each ascending, ordered by
// smallest member; the lexicographically smallest colliding pair is the
// first two members of the group minimizing that pair.
struct CollisionScan {
    std::vector<std::vector<std::uint32_t>> groups;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

CollisionScan scan_collisions(const std::vector<Representation>& reps) {
    std::vector<std::uint32_t> order(reps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (reps[a] != reps[b]) return reps[a] < reps[b];
        return a < b;
    });

    CollisionScan result;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && reps[order[j]] == reps[order[i]]) ++j;
        if (j - i >= 2) {
            std::vector<std::uint32_t> group(order.begin() + i, order.begin() + j);
            std::sort(group.begin(), group.end());
            std::pair<std::uint32_t, std::uint32_t> cand{group[0], group[1]};
            if (!result.witness || cand < *result.witness) result.witness = cand;
            result.groups.push_back(std::move(group));
        }
        i = j;
    }
    std::sort(result.groups.begin(), result.groups.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return result;
}

// Unchecked bulk paths; callers have validated the landmark set.
std::vector<Representation> all_vertex_reps(const DistanceOracle& oracle,
                                            const LandmarkSet& landmarks) {
    std::vector<Representation> reps(oracle.vertex_count());
    for (VertexId u = 0; u < oracle.vertex_count(); ++u) {
        auto row = oracle.row(u);
        reps[u].resize(landmarks.size());
        for (std::size_t i = 0; i < landmarks.size(); ++i)
            reps[u][i] = row[landmarks[i]];
    }
    return reps;
}

std::vector<Representation> all_edge_reps(const DistanceOracle& oracle,
                                          std::span<const Edge> edges,
                                          const LandmarkSet& landmarks) {
    std::vector<Representation> reps(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto row_a = oracle.row(edges[i].first);
        auto row_b = oracle.row(edges[i].second);
        reps[i].resize(landmarks.size());
        for (std::size_t k = 0; k < landmarks.size(); ++k)
            reps[i][k] = std::min(row_a[landmarks[k]], row_b[landmarks[k]]);
    }
    return reps;
}

} // namespace

void validate_landmarks(std::size_t vertex_count, const LandmarkSet& landmarks) {
    for (VertexId v : landmarks)
        if (v >= vertex_count)
            throw GraphError(ErrorKind::vertex_out_of_range,
                             "landmark " + std::to_string(v) + " out of range");
    LandmarkSet sorted = landmarks;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw GraphError(ErrorKind::invalid_landmarks, "duplicate landmark");
}

Representation vertex_representation(const DistanceOracle& oracle, VertexId u,
                                     const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    if (u >= oracle.vertex_count())
        throw GraphError(ErrorKind::vertex_out_of_range,
                         "vertex " + std::to_string(u) + " out of range");
    Representation rep(landmarks.size());
    auto row = oracle.row(u);
    for (std::size_t i = 0; i < landmarks.size(); ++i) rep[i] = row[landmarks[i]];
    return rep;
}

Representation edge_representation(const DistanceOracle& oracle, Edge e,
                                   const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    e = make_edge(e.first, e.second);
    if (e.second >= oracle.vertex_count() || oracle(e.first, e.second) != 1)
        throw GraphError(ErrorKind::not_an_edge,
                         "(" + std::to_string(e.first) + ", " +
                             std::to_string(e.second) + ") is not an edge");
    Representation rep(landmarks.size());
    auto row_a = oracle.row(e.first);
    auto row_b = oracle.row(e.second);
    for (std::size_t i = 0; i < landmarks.size(); ++i)
        rep[i] = std::min(row_a[landmarks[i]], row_b[landmarks[i]]);
    return rep;
}

VertexResolveVerdict is_vertex_resolving(const DistanceOracle& oracle,
                                         const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    auto scan = scan_collisions(all_vertex_reps(oracle, landmarks));
    VertexResolveVerdict verdict;
    verdict.resolving = !scan.witness.has_value();
    if (scan.witness) verdict.witness = *scan.witness;
    return verdict;
}

EdgeResolveVerdict is_edge_resolving(const DistanceOracle& oracle,
                                     std::span<const Edge> edges,
                                     const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    auto scan = scan_collisions(all_edge_reps(oracle, edges, landmarks));
    EdgeResolveVerdict verdict;
    verdict.resolving = !scan.witness.has_value();
    if (scan.witness)
        verdict.witness = std::pair{edges[scan.witness->first],
                                    edges[scan.witness->second]};
    return verdict;
}

std::vector<std::vector<VertexId>> vertex_collision_groups(
    const DistanceOracle& oracle, const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    return scan_collisions(all_vertex_reps(oracle, landmarks)).groups;
}

std::vector<std::vector<Edge>> edge_collision_groups(
    const DistanceOracle& oracle, std::span<const Edge> edges,
    const LandmarkSet& landmarks) {
    validate_landmarks(oracle.vertex_count(), landmarks);
    auto scan = scan_collisions(all_edge_reps(oracle, edges, landmarks));
    std::vector<std::vector<Edge>> groups;
    groups.reserve(scan.groups.size());
    for (const auto& group : scan.groups) {
        std::vector<Edge> g;
        g.reserve(group.size());
        for (std::uint32_t idx : group) g.push_back(edges[idx]);
        groups.push_back(std::move(g));
    }
    return groups;
}

} // namespace ccs
