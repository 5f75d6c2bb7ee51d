#include <algorithm>
#include <map>
#include <doctest.h>

#include "ccs/ccs_graph.hpp"
#include "ccs/distance.hpp"
#include "ccs/resolve.hpp"

#include "testutil.hpp"

using namespace ccs;

namespace {

// Expected representations of e1..e12 with respect to {r1, r2, r3}.
constexpr Dist kEdgeTable[12][3] = {
    {0, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}, {1, 2, 2},
    {0, 1, 2}, {1, 1, 2}, {2, 2, 1}, {1, 0, 1}, {2, 1, 0}, {2, 1, 1},
};

} // namespace

TEST_CASE("unit cube labeling reproduces the representation table") {
    auto lab = unit_cube_labeling();
    CHECK(lab.graph.vertex_count() == 8);
    CHECK(lab.graph.edge_count() == 12);

    // r ids are distinct, e entries are edges of the graph
    auto rs = lab.r;
    std::sort(rs.begin(), rs.end());
    CHECK(std::adjacent_find(rs.begin(), rs.end()) == rs.end());
    for (const auto& e : lab.e) CHECK(lab.graph.has_edge(e.first, e.second));
    auto es = lab.e;
    std::sort(es.begin(), es.end());
    CHECK(std::adjacent_find(es.begin(), es.end()) == es.end());

    auto oracle = all_pairs(lab.graph);
    LandmarkSet re{lab.r[0], lab.r[1], lab.r[2]};
    for (int i = 0; i < 12; ++i) {
        auto rep = edge_representation(oracle, lab.e[i], re);
        Representation expected(std::begin(kEdgeTable[i]), std::end(kEdgeTable[i]));
        CHECK_MESSAGE(rep == expected, "edge e" << i + 1);
    }
}

TEST_CASE("cube antipode") {
    CHECK(cube_antipode(0) == 7);
    CHECK(cube_antipode(3) == 4);
    CHECK(cube_antipode(12) == 11); // cube 1, local 4 -> local 3
}

TEST_CASE("generate_ccs counts match closed forms for n = 1..4") {
    const std::uint64_t cubes[] = {1, 9, 65, 457};
    const std::uint64_t vertices[] = {8, 72, 520, 3656};
    const std::uint64_t edges[] = {12, 116, 844, 5940};
    const std::uint64_t outermost[] = {1, 8, 56, 392};
    const std::uint64_t degree3[] = {8, 56, 392, 2744};

    for (unsigned n = 1; n <= 4; ++n) {
        auto expected = expected_counts(n);
        CHECK(expected.cubes == cubes[n - 1]);
        CHECK(expected.vertices == vertices[n - 1]);
        CHECK(expected.edges == edges[n - 1]);
        CHECK(expected.outermost_cubes == outermost[n - 1]);
        CHECK(expected.degree3_vertices == degree3[n - 1]);
        CHECK(expected.bridge_edges == cubes[n - 1] - 1);

        auto g = generate_ccs(n);
        CHECK(measured_counts(g) == expected);
        CHECK(g.graph.vertex_count() == 8 * g.cubes.size());
        CHECK(g.graph.edge_count() == 12 * g.cubes.size() + g.cubes.size() - 1);
    }
}

TEST_CASE("generation guard") {
    CHECK_THROWS_AS(generate_ccs(0), GraphError);
    CHECK_THROWS_AS(expected_counts(0), GraphError);
    try {
        generate_ccs(kDefaultMaxLevel + 1);
        FAIL("expected guard error");
    } catch (const GraphError& e) {
        CHECK(e.kind() == ErrorKind::guard_exceeded);
    }
    // explicit override admits larger n
    CHECK_NOTHROW(generate_ccs(5, 5));
}

TEST_CASE("cube records form the expected tree") {
    auto g = generate_ccs(3);

    std::map<std::uint32_t, std::size_t> children;
    for (const auto& cube : g.cubes) {
        if (cube.cube_id == 0) {
            CHECK(!cube.parent_cube);
            CHECK(!cube.attachment_vertex);
            CHECK(!cube.bridge_edge);
            CHECK(cube.role == CubeRole::central);
            CHECK(cube.level == 1);
            continue;
        }
        CHECK(cube.parent_cube.has_value());
        ++children[*cube.parent_cube];
        // bridge joins a parent-cube vertex to this cube's attachment corner
        CHECK(*cube.attachment_vertex == g.vertex_of(cube.cube_id, 0));
        CHECK(cube.bridge_edge->second == *cube.attachment_vertex);
        CHECK(cube.bridge_edge->first / 8 == *cube.parent_cube);
        CHECK(g.graph.has_edge(cube.bridge_edge->first, cube.bridge_edge->second));
        CHECK(g.graph.degree(*cube.attachment_vertex) == 4);
        CHECK(cube.level == g.cubes[*cube.parent_cube].level + 1);
    }
    // 8 children at the root, 7 at every other internal cube
    CHECK(children[0] == 8);
    for (const auto& [parent, count] : children)
        if (parent != 0) CHECK(count == 7);
    std::size_t internal_nonroot = 0;
    for (const auto& cube : g.cubes)
        if (cube.cube_id != 0 && children.count(cube.cube_id)) ++internal_nonroot;
    CHECK(internal_nonroot == 8);
}

TEST_CASE("roles and degrees per cube") {
    SUBCASE("n = 2") {
        auto g = generate_ccs(2);
        CHECK(g.cubes.size() == 9);
        CHECK(g.cubes[0].role == CubeRole::central);
        for (std::size_t i = 1; i < 9; ++i) {
            CHECK(g.cubes[i].role == CubeRole::outermost);
            VertexId base = g.vertex_of(g.cubes[i].cube_id, 0);
            CHECK(g.graph.degree(base) == 4);
            for (VertexId local = 1; local < 8; ++local)
                CHECK(g.graph.degree(base + local) == 3);
        }
        for (VertexId v = 0; v < 8; ++v) CHECK(g.graph.degree(v) == 4);
    }
    SUBCASE("n = 3 intermediates are saturated") {
        auto g = generate_ccs(3);
        for (const auto& cube : g.cubes) {
            if (cube.level == 2) CHECK(cube.role == CubeRole::intermediate);
            if (cube.role != CubeRole::outermost) {
                VertexId base = g.vertex_of(cube.cube_id, 0);
                for (VertexId local = 0; local < 8; ++local)
                    CHECK(g.graph.degree(base + local) == 4);
            }
        }
    }
}

TEST_CASE("vertex to cube mapping") {
    auto g = generate_ccs(2);
    for (VertexId v = 0; v < g.graph.vertex_count(); ++v) {
        CHECK(g.vertex_of(g.cube_of(v), g.local_index(v)) == v);
        CHECK(g.cube_of(v) < g.cubes.size());
        CHECK(g.local_index(v) < 8);
    }
}

TEST_CASE("canonical landmarks") {
    SUBCASE("n = 1 is the r1,r2,r3 triple") {
        auto g = generate_ccs(1);
        auto lab = unit_cube_labeling();
        auto landmarks = canonical_landmarks(g);
        REQUIRE(landmarks.size() == 3);
        CHECK(landmarks == LandmarkSet{lab.r[0], lab.r[1], lab.r[2]});
    }
    SUBCASE("n = 2 and n = 3 sizes follow 7^(n-2) * 16") {
        CHECK(canonical_landmarks(generate_ccs(2)).size() == 16);
        CHECK(canonical_landmarks(generate_ccs(3)).size() == 112);
    }
    SUBCASE("two neighbors of each outermost attachment vertex, distance 2 apart") {
        auto g = generate_ccs(2);
        auto oracle = all_pairs(g.graph);
        auto landmarks = canonical_landmarks(g);
        REQUIRE(landmarks.size() % 2 == 0);
        std::size_t i = 0;
        for (const auto& cube : g.cubes) {
            if (cube.level != g.n) continue;
            VertexId a1 = landmarks[i++];
            VertexId a2 = landmarks[i++];
            CHECK(g.cube_of(a1) == cube.cube_id);
            CHECK(g.cube_of(a2) == cube.cube_id);
            CHECK(g.graph.has_edge(a1, *cube.attachment_vertex));
            CHECK(g.graph.has_edge(a2, *cube.attachment_vertex));
            CHECK(oracle(a1, a2) == 2);
        }
        CHECK(i == landmarks.size());
    }
}
