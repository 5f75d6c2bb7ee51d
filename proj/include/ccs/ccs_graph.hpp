#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "ccs/graph.hpp"
#include "ccs/resolve.hpp"

namespace ccs {

enum class CubeRole { central, intermediate, outermost };

const char* cube_role_name(CubeRole role);

struct CubeRecord {
    std::uint32_t cube_id = 0;
    std::uint32_t level = 1; // 1 = central cube
    CubeRole role = CubeRole::central;
    // Vertex "c" of this cube, incident to the bridge towards the parent.
    std::optional<VertexId> attachment_vertex;
    std::optional<std::uint32_t> parent_cube;
    std::optional<Edge> bridge_edge;
};

struct CountReport {
    std::uint64_t cubes = 0;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;
    std::uint64_t bridge_edges = 0;
    std::uint64_t outermost_cubes = 0;
    std::uint64_t degree3_vertices = 0;

    bool operator==(const CountReport&) const = default;
};

/// CCS(n): a central cube with new cubes bridged onto every degree-3 vertex,
/// level by level. Vertex ids are cube-major (cube_id*8 + local index); the
/// local index is the 3-bit corner coordinate of the cube, so local adjacency
/// is Hamming distance 1 and the attachment corner is local index 0.
struct CcsGraph {
    Graph graph;
    unsigned n = 1;
    std::vector<CubeRecord> cubes;

    std::uint32_t cube_of(VertexId v) const { return v / 8; }
    std::uint32_t local_index(VertexId v) const { return v % 8; }
    VertexId vertex_of(std::uint32_t cube_id, std::uint32_t local) const {
        return cube_id * 8 + local;
    }
};

// Default cap on n for generate_ccs; pass a larger guard to override.
inline constexpr unsigned kDefaultMaxLevel = 6;

CcsGraph generate_ccs(unsigned n, unsigned max_level_guard = kDefaultMaxLevel);

// Closed-form counts (no graph construction).
CountReport expected_counts(unsigned n);

// Counts measured on a generated instance (degrees, roles, bridges).
CountReport measured_counts(const CcsGraph& g);

/// The fixed r1..r8 / e1..e12 labeling of the unit cube: r1..r4 form the
/// bottom 4-cycle, r5..r8 the top (r_{i+4} above r_i); e1..e4 bottom cycle,
/// e5,e7,e10,e11 verticals, e6,e8,e9,e12 top cycle.
struct UnitCubeLabeling {
    Graph graph;                 // Q3 on vertex ids 0..7
    std::array<VertexId, 8> r;   // r[i] = vertex id of r_{i+1}
    std::array<Edge, 12> e;      // e[i] = endpoints of e_{i+1}
};

UnitCubeLabeling unit_cube_labeling();

// Antipodal corner within the same cube (local coordinate complement).
inline VertexId cube_antipode(VertexId v) { return (v / 8) * 8 + (7 - v % 8); }

/// Landmark set whose size is 3 for n = 1 and 7^(n-2)*16 for n >= 2: the
/// {r1, r2, r3} corner triple for the unit cube, otherwise the two
/// lowest-indexed neighbors of the attachment vertex of every outermost cube.
LandmarkSet canonical_landmarks(const CcsGraph& g);

} // namespace ccs
