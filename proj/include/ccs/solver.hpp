#pragma once

#include <iosfwd>

#include "ccs/bitset.hpp"
#include "ccs/resolve.hpp"

namespace ccs {

enum class Variant { vertex, edge };

const char* variant_name(Variant v);

/// Hitting-set recast of resolvability: one row per unordered item pair
/// (vertices or edges), one column per candidate landmark vertex; bit set
/// iff that vertex distinguishes the pair. A landmark set resolves iff it
/// hits every row.
struct DistinguishingMatrix {
    Variant variant = Variant::vertex;
    std::size_t vertex_count = 0;
    // Item indices: vertex ids, or positions in `edge_items`.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<Bitset> rows; // rows[i] over vertex columns
    std::vector<Edge> edge_items; // canonical edge list (edge variant only)

    std::string item_name(std::uint32_t item) const;

    // Rows no vertex can hit (twin items). Non-empty means unresolvable.
    std::vector<std::size_t> zero_rows() const;

    bool hits_all_rows(const LandmarkSet& landmarks) const;
};

// Thrown when a matrix contains an all-zero row; carries the twin pair.
class UnresolvablePairError : public GraphError {
public:
    UnresolvablePairError(Variant variant, std::uint32_t item1, std::uint32_t item2,
                          const std::string& message)
        : GraphError(ErrorKind::unresolvable_pair, message),
          variant_(variant), item1_(item1), item2_(item2) {}

    Variant variant() const { return variant_; }
    std::uint32_t item1() const { return item1_; }
    std::uint32_t item2() const { return item2_; }

private:
    Variant variant_;
    std::uint32_t item1_, item2_;
};

// Requires a connected graph.
DistinguishingMatrix build_matrix(const DistanceOracle& oracle, const Graph& g,
                                  Variant variant);

// Greedy set cover: repeatedly take the vertex hitting the most uncovered
// rows, lowest id on ties. Result is resolving but not necessarily minimum.
LandmarkSet solve_greedy(const DistinguishingMatrix& matrix);

struct SolveBudget {
    std::uint64_t max_nodes = 50'000'000; // 0 = unlimited
    double time_limit_s = 0;              // 0 = unlimited
    std::size_t exact_vertex_guard = 64;  // refuse exact search above this
};

struct SolveResult {
    LandmarkSet landmarks;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    double elapsed_s = 0;
    Variant variant = Variant::vertex;
};

/// Exact minimum hitting set by branch and bound: branch on the uncovered
/// row with fewest remaining options, children by descending coverage,
/// greedy-disjoint-row lower bound. Exhausting the search yields the
/// canonical optimum (lexicographically smallest minimum set, equal to what
/// brute_force_min returns); an exhausted budget yields the best incumbent
/// with optimal = false. The returned set is re-verified against the oracle
/// through the resolve module before returning.
SolveResult solve_exact(const DistinguishingMatrix& matrix,
                        const DistanceOracle& oracle, const Graph& g,
                        const SolveBudget& budget = {});

/// Independent oracle: enumerates subsets in increasing cardinality,
/// lexicographic within a cardinality, and returns the first resolving set.
/// Feasibility goes through the resolve module directly, not the matrix.
/// Guarded to graphs with at most 16 vertices.
LandmarkSet brute_force_min(const DistanceOracle& oracle, const Graph& g,
                            Variant variant);

// DIMACS-like export: "p hittingset <pairs> <vertices>" then one line per
// row listing the distinguishing vertex ids.
void write_hitting_set(std::ostream& out, const DistinguishingMatrix& matrix);

} // namespace ccs
