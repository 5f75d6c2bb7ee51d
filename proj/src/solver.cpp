#include "ccs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <ostream>

namespace ccs {

namespace {

constexpr std::size_t kInfeasible = static_cast<std::size_t>(-1);

[[noreturn]] void throw_unresolvable(const DistinguishingMatrix& m,
                                     std::size_t row) {
    auto [a, b] = m.pairs[row];
    throw UnresolvablePairError(
        m.variant, a, b,
        std::string("no vertex distinguishes the ") + variant_name(m.variant) +
            " pair " + m.item_name(a) + " / " + m.item_name(b));
}

} // namespace

const char* variant_name(Variant v) {
    return v == Variant::vertex ? "vertex" : "edge";
}

std::string DistinguishingMatrix::item_name(std::uint32_t item) const {
    if (variant == Variant::vertex) return std::to_string(item);
    const Edge& e = edge_items[item];
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::vector<std::size_t> DistinguishingMatrix::zero_rows() const {
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!rows[i].any()) zeros.push_back(i);
    return zeros;
}

bool DistinguishingMatrix::hits_all_rows(const LandmarkSet& landmarks) const {
    Bitset chosen(vertex_count);
    for (VertexId v : landmarks) chosen.set(v);
    for (const auto& row : rows)
        if (!row.intersects(chosen)) return false;
    return true;
}

DistinguishingMatrix build_matrix(const DistanceOracle& oracle, const Graph& g,
                                  Variant variant) {
    if (!is_connected(g))
        throw GraphError(ErrorKind::not_connected,
                         "distinguishing matrix requires a connected graph");

    const std::size_t n = g.vertex_count();
    DistinguishingMatrix m;
    m.variant = variant;
    m.vertex_count = n;

    // Distance profile of each item over all candidate vertices.
    std::vector<std::vector<Dist>> profile;
    std::size_t items;
    if (variant == Variant::vertex) {
        items = n;
        profile.resize(items);
        for (VertexId u = 0; u < n; ++u) {
            auto row = oracle.row(u);
            profile[u].assign(row.begin(), row.end());
        }
    } else {
        m.edge_items = g.edges();
        items = m.edge_items.size();
        profile.resize(items);
        for (std::size_t i = 0; i < items; ++i) {
            profile[i].resize(n);
            for (VertexId v = 0; v < n; ++v)
                profile[i][v] = edge_vertex_distance(oracle, m.edge_items[i], v);
        }
    }

    for (std::uint32_t a = 0; a < items; ++a)
        for (std::uint32_t b = a + 1; b < items; ++b) {
            Bitset row(n);
            for (VertexId v = 0; v < n; ++v)
                if (profile[a][v] != profile[b][v]) row.set(v);
            m.pairs.emplace_back(a, b);
            m.rows.push_back(std::move(row));
        }
    return m;
}

namespace {

// Generators are nonempty by convention on graphs with at least two
// vertices, even when no item pair needs distinguishing (a single edge).
LandmarkSet trivial_generator(const DistinguishingMatrix& matrix) {
    return matrix.vertex_count >= 2 ? LandmarkSet{0} : LandmarkSet{};
}

} // namespace

LandmarkSet solve_greedy(const DistinguishingMatrix& matrix) {
    auto zeros = matrix.zero_rows();
    if (!zeros.empty()) throw_unresolvable(matrix, zeros.front());
    if (matrix.rows.empty()) return trivial_generator(matrix);

    std::vector<char> covered(matrix.rows.size(), 0);
    std::size_t uncovered = matrix.rows.size();
    LandmarkSet chosen;
    std::vector<std::size_t> gain(matrix.vertex_count);
    while (uncovered > 0) {
        std::fill(gain.begin(), gain.end(), 0);
        for (std::size_t i = 0; i < matrix.rows.size(); ++i)
            if (!covered[i])
                matrix.rows[i].for_each([&](std::size_t v) { ++gain[v]; });
        std::size_t best_v = 0;
        for (std::size_t v = 1; v < gain.size(); ++v)
            if (gain[v] > gain[best_v]) best_v = v;
        chosen.push_back(static_cast<VertexId>(best_v));
        for (std::size_t i = 0; i < matrix.rows.size(); ++i)
            if (!covered[i] && matrix.rows[i].test(best_v)) {
                covered[i] = 1;
                --uncovered;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

// Depth-first branch and bound for minimum hitting set. Branching follows
// the fail-first rule: pick the uncovered row with the fewest remaining
// candidate vertices, try its vertices in order of decreasing coverage, and
// forbid each vertex before moving to its sibling so no hitting set is
// enumerated twice. Subtrees are cut only when they cannot beat the
// incumbent strictly, so every minimum-size set is still visited and the
// lexicographically smallest one survives as the incumbent.
struct ExactSearch {
    const DistinguishingMatrix& m;
    const SolveBudget& budget;

    std::vector<std::uint16_t> cover_count;
    std::size_t uncovered = 0;
    Bitset allowed;
    std::vector<VertexId> chosen;

    LandmarkSet best;
    bool have_best = false;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    ExactSearch(const DistinguishingMatrix& matrix, const SolveBudget& b)
        : m(matrix), budget(b), cover_count(matrix.rows.size(), 0),
          uncovered(matrix.rows.size()), allowed(matrix.vertex_count) {
        allowed.set_all();
        if (budget.time_limit_s > 0) {
            has_deadline = true;
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(budget.time_limit_s));
        }
    }

    bool out_of_budget() {
        if (budget.max_nodes && nodes >= budget.max_nodes) return true;
        // clock polled every 256 nodes, starting with the first
        if (has_deadline && (nodes & 0xff) == 1 &&
            std::chrono::steady_clock::now() >= deadline)
            return true;
        return false;
    }

    void choose(VertexId v) {
        chosen.push_back(v);
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (m.rows[i].test(v) && ++cover_count[i] == 1) --uncovered;
    }

    void unchoose(VertexId v) {
        chosen.pop_back();
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (m.rows[i].test(v) && --cover_count[i] == 0) ++uncovered;
    }

    void offer_solution() {
        LandmarkSet candidate(chosen.begin(), chosen.end());
        std::sort(candidate.begin(), candidate.end());
        if (!have_best || candidate.size() < best.size() ||
            (candidate.size() == best.size() && candidate < best)) {
            best = std::move(candidate);
            have_best = true;
        }
    }

    // Pairwise-disjoint uncovered rows each need their own vertex. Fills
    // open_rows with the uncovered rows ordered by remaining options and
    // points branch_row at the most constrained one.
    std::size_t lower_bound(std::vector<std::size_t>& open_rows,
                            std::size_t& branch_row) {
        std::vector<std::pair<std::size_t, std::size_t>> open; // (options, row)
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            if (cover_count[i]) continue;
            std::size_t options = m.rows[i].count_and(allowed);
            if (options == 0) return kInfeasible;
            open.emplace_back(options, i);
        }
        std::sort(open.begin(), open.end());
        branch_row = open.front().second;
        open_rows.clear();
        open_rows.reserve(open.size());
        Bitset used(m.vertex_count);
        std::size_t lb = 0;
        for (const auto& [options, i] : open) {
            open_rows.push_back(i);
            if (m.rows[i].intersects_and(allowed, used)) continue;
            ++lb;
            used.or_and(m.rows[i], allowed);
        }
        return lb;
    }

    void dfs() {
        ++nodes;
        if (out_of_budget()) {
            aborted = true;
            return;
        }
        if (uncovered == 0) {
            offer_solution();
            return;
        }

        std::vector<std::size_t> open_rows;
        std::size_t branch_row;
        std::size_t lb = lower_bound(open_rows, branch_row);
        if (lb == kInfeasible) return;
        if (have_best && chosen.size() + lb > best.size()) return;

        std::vector<VertexId> options;
        m.rows[branch_row].for_each_and(
            allowed, [&](std::size_t v) { options.push_back(static_cast<VertexId>(v)); });
        std::vector<std::size_t> coverage(options.size(), 0);
        for (std::size_t i : open_rows)
            for (std::size_t k = 0; k < options.size(); ++k)
                if (m.rows[i].test(options[k])) ++coverage[k];
        std::vector<std::size_t> order(options.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (coverage[a] != coverage[b]) return coverage[a] > coverage[b];
            return options[a] < options[b];
        });

        std::vector<VertexId> banned;
        for (std::size_t k : order) {
            VertexId v = options[k];
            choose(v);
            dfs();
            unchoose(v);
            if (aborted) break;
            allowed.reset(v);
            banned.push_back(v);
        }
        for (VertexId v : banned) allowed.set(v);
    }
};

void verify_with_resolve(const SolveResult& result, const DistanceOracle& oracle,
                         const Graph& g) {
    bool ok = result.variant == Variant::vertex
                  ? is_vertex_resolving(oracle, result.landmarks).resolving
                  : is_edge_resolving(oracle, g.edges(), result.landmarks).resolving;
    if (!ok)
        throw std::logic_error("solver produced a non-resolving landmark set");
}

} // namespace

SolveResult solve_exact(const DistinguishingMatrix& matrix,
                        const DistanceOracle& oracle, const Graph& g,
                        const SolveBudget& budget) {
    if (matrix.vertex_count > budget.exact_vertex_guard)
        throw GraphError(ErrorKind::guard_exceeded,
                         "exact solve guarded to " +
                             std::to_string(budget.exact_vertex_guard) +
                             " vertices (graph has " +
                             std::to_string(matrix.vertex_count) + ")");
    auto zeros = matrix.zero_rows();
    if (!zeros.empty()) throw_unresolvable(matrix, zeros.front());

    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    if (matrix.rows.empty()) {
        result.landmarks = trivial_generator(matrix);
        result.optimal = true;
    } else {
        ExactSearch search(matrix, budget);
        search.best = solve_greedy(matrix);
        search.have_best = true;
        search.dfs();
        result.landmarks = search.best;
        result.optimal = !search.aborted;
        result.nodes_explored = search.nodes;
    }
    result.variant = matrix.variant;
    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    verify_with_resolve(result, oracle, g);
    return result;
}

LandmarkSet brute_force_min(const DistanceOracle& oracle, const Graph& g,
                            Variant variant) {
    constexpr std::size_t kMaxVertices = 16;
    const std::size_t n = g.vertex_count();
    if (n > kMaxVertices)
        throw GraphError(ErrorKind::guard_exceeded,
                         "brute force guarded to 16 vertices");

    auto resolving = [&](const LandmarkSet& k) {
        return variant == Variant::vertex
                   ? is_vertex_resolving(oracle, k).resolving
                   : is_edge_resolving(oracle, g.edges(), k).resolving;
    };

    // nonempty-generator convention for nontrivial graphs
    for (std::size_t k = n >= 2 ? 1 : 0; k <= n; ++k) {
        std::vector<VertexId> comb(k);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            LandmarkSet candidate(comb.begin(), comb.end());
            if (resolving(candidate)) return candidate;
            // next combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    throw std::logic_error("no resolving set found (disconnected input?)");
}

void write_hitting_set(std::ostream& out, const DistinguishingMatrix& matrix) {
    out << "c " << variant_name(matrix.variant) << " distinguishing matrix\n";
    out << "p hittingset " << matrix.rows.size() << ' ' << matrix.vertex_count
        << '\n';
    for (const auto& row : matrix.rows) {
        bool first = true;
        row.for_each([&](std::size_t v) {
            if (!first) out << ' ';
            out << v;
            first = false;
        });
        out << '\n';
    }
}

} // namespace ccs
