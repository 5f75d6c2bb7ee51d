#include "ccs/ccs_graph.hpp"

#include <algorithm>

namespace ccs {

namespace {

void check_level(unsigned n, unsigned guard) {
    if (n < 1)
        throw GraphError(ErrorKind::guard_exceeded, "n must be >= 1");
    if (n > guard)
        throw GraphError(ErrorKind::guard_exceeded,
                         "n = " + std::to_string(n) + " exceeds the level guard " +
                             std::to_string(guard) +
                             " (pass a larger guard to override)");
}

// The 12 edges of the cube whose vertices are base+0 .. base+7, adjacency =
// local coordinates differing in one bit.
void append_cube_edges(std::vector<Edge>& edges, VertexId base) {
    for (VertexId local = 0; local < 8; ++local)
        for (VertexId bit : {1u, 2u, 4u}) {
            VertexId other = local ^ bit;
            if (local < other)
                edges.emplace_back(base + local, base + other);
        }
}

} // namespace

const char* cube_role_name(CubeRole role) {
    switch (role) {
        case CubeRole::central: return "central";
        case CubeRole::intermediate: return "intermediate";
        case CubeRole::outermost: return "outermost";
    }
    return "?";
}

CcsGraph generate_ccs(unsigned n, unsigned max_level_guard) {
    check_level(n, max_level_guard);

    std::vector<CubeRecord> cubes;
    cubes.push_back(CubeRecord{0, 1, CubeRole::central, {}, {}, {}});

    std::vector<Edge> edges;
    append_cube_edges(edges, 0);
    std::vector<std::uint8_t> degree(8, 3);

    // Cube ids follow BFS order over the cube tree: each level attaches one
    // cube to every degree-3 vertex of the previous level, in vertex id
    // order. Parent vertex ids are cube-major, so this also orders children
    // of one parent cube by their bridge endpoint.
    for (unsigned level = 2; level <= n; ++level) {
        std::vector<VertexId> frontier;
        for (VertexId v = 0; v < degree.size(); ++v)
            if (degree[v] == 3) frontier.push_back(v);

        for (VertexId host : frontier) {
            auto cube_id = static_cast<std::uint32_t>(cubes.size());
            VertexId base = cube_id * 8;
            append_cube_edges(edges, base);
            degree.insert(degree.end(), {4, 3, 3, 3, 3, 3, 3, 3});

            edges.emplace_back(host, base); // bridge; host < base always
            degree[host] = 4;

            CubeRecord rec;
            rec.cube_id = cube_id;
            rec.level = level;
            rec.role = CubeRole::outermost;
            rec.attachment_vertex = base;
            rec.parent_cube = host / 8;
            rec.bridge_edge = Edge{host, base};
            cubes.push_back(rec);
        }
        if (level < n) {
            for (auto& rec : cubes)
                if (rec.level == level) rec.role = CubeRole::intermediate;
        }
    }

    CcsGraph result;
    result.graph = Graph::build(cubes.size() * 8, std::move(edges));
    result.n = n;
    result.cubes = std::move(cubes);
    return result;
}

CountReport expected_counts(unsigned n) {
    check_level(n, 20); // closed forms only; counts stay within 64 bits

    CountReport r;
    std::uint64_t cubes = 1, outer = 1;
    for (unsigned level = 2; level <= n; ++level) {
        outer = (level == 2) ? 8 : outer * 7;
        cubes += outer;
    }
    r.cubes = cubes;
    r.vertices = 8 * cubes;
    r.edges = 12 * cubes + (cubes - 1);
    r.bridge_edges = cubes - 1;
    r.outermost_cubes = outer;
    r.degree3_vertices = (n == 1) ? 8 : 7 * outer;
    return r;
}

CountReport measured_counts(const CcsGraph& g) {
    CountReport r;
    r.cubes = g.cubes.size();
    r.vertices = g.graph.vertex_count();
    r.edges = g.graph.edge_count();
    for (const auto& cube : g.cubes) {
        if (cube.bridge_edge) ++r.bridge_edges;
        if (cube.level == g.n) ++r.outermost_cubes;
    }
    for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
        if (g.graph.degree(v) == 3) ++r.degree3_vertices;
    return r;
}

UnitCubeLabeling unit_cube_labeling() {
    UnitCubeLabeling lab;
    lab.graph = generate_ccs(1).graph;
    // Corner coordinates: r1..r4 walk the bottom face, r_{i+4} sits above r_i.
    lab.r = {0, 1, 3, 2, 4, 5, 7, 6};
    auto R = [&](int i) { return lab.r[i - 1]; };
    auto E = [&](int i, int j) { return make_edge(R(i), R(j)); };
    lab.e = {
        E(1, 2), // e1
        E(2, 3), // e2
        E(3, 4), // e3
        E(4, 1), // e4
        E(4, 8), // e5
        E(5, 8), // e6
        E(1, 5), // e7
        E(5, 6), // e8
        E(7, 8), // e9
        E(2, 6), // e10
        E(3, 7), // e11
        E(6, 7), // e12
    };
    return lab;
}

LandmarkSet canonical_landmarks(const CcsGraph& g) {
    if (g.n == 1) {
        auto lab = unit_cube_labeling();
        return {lab.r[0], lab.r[1], lab.r[2]};
    }
    LandmarkSet landmarks;
    for (const auto& cube : g.cubes) {
        if (cube.level != g.n) continue;
        VertexId c = *cube.attachment_vertex;
        landmarks.push_back(c + 1);
        landmarks.push_back(c + 2);
    }
    return landmarks;
}

} // namespace ccs
