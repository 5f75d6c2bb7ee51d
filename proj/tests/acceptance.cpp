// Acceptance suite: end-to-end checks of the library's headline results,
// one pass/fail line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "ccs/certify.hpp"
#include "ccs/random_graph.hpp"
#include "ccs/solver.hpp"

using namespace ccs;

namespace {

struct Runner {
    int failures = 0;

    void criterion(int id, const std::string& what, double limit_s,
                   const std::function<bool(std::string&)>& body) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (limit_s > 0 && elapsed > limit_s) {
            ok = false;
            note += (note.empty() ? "" : "; ") + std::string("over time limit ") +
                    std::to_string(limit_s) + " s";
        }
        if (!ok) ++failures;
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                    id, what.c_str(), elapsed, note.empty() ? "" : " -- ",
                    note.c_str());
        std::fflush(stdout);
    }
};

// Expected representations of e1..e12 with respect to {r1, r2, r3}.
constexpr Dist kEdgeTable[12][3] = {
    {0, 0, 1}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 2, 1}, {1, 2, 2},
    {0, 1, 2}, {1, 1, 2}, {2, 2, 1}, {1, 0, 1}, {2, 1, 0}, {2, 1, 1},
};

bool group_contains(const std::vector<std::vector<Edge>>& groups, Edge a, Edge b) {
    for (const auto& g : groups) {
        bool has_a = false, has_b = false;
        for (const auto& e : g) {
            has_a = has_a || e == a;
            has_b = has_b || e == b;
        }
        if (has_a && has_b) return true;
    }
    return false;
}

} // namespace

int main() {
    Runner run;

    auto ccs1 = generate_ccs(1);
    auto oracle1 = all_pairs(ccs1.graph);

    run.criterion(1, "edim(CCS(1)) = 3, exact search and brute force agree", 1.0,
                  [&](std::string& note) {
                      auto m = build_matrix(oracle1, ccs1.graph, Variant::edge);
                      auto exact = solve_exact(m, oracle1, ccs1.graph);
                      auto brute = brute_force_min(oracle1, ccs1.graph, Variant::edge);
                      note = "size " + std::to_string(exact.landmarks.size());
                      return exact.optimal && exact.landmarks.size() == 3 &&
                             brute.size() == 3 && exact.landmarks == brute;
                  });

    run.criterion(2, "dim(CCS(1)) = 3, exact search and brute force agree", 1.0,
                  [&](std::string& note) {
                      auto m = build_matrix(oracle1, ccs1.graph, Variant::vertex);
                      auto exact = solve_exact(m, oracle1, ccs1.graph);
                      auto brute =
                          brute_force_min(oracle1, ccs1.graph, Variant::vertex);
                      note = "size " + std::to_string(exact.landmarks.size());
                      return exact.optimal && exact.landmarks.size() == 3 &&
                             brute.size() == 3 && exact.landmarks == brute;
                  });

    run.criterion(
        3, "representation table reproduced; every 2-subset fails", 1.0,
        [&](std::string& note) {
            auto lab = unit_cube_labeling();
            auto oracle = all_pairs(lab.graph);
            auto edges = lab.graph.edges();
            LandmarkSet re{lab.r[0], lab.r[1], lab.r[2]};
            for (int i = 0; i < 12; ++i) {
                Representation expected(std::begin(kEdgeTable[i]),
                                        std::end(kEdgeTable[i]));
                if (edge_representation(oracle, lab.e[i], re) != expected) {
                    note = "row e" + std::to_string(i + 1) + " mismatch";
                    return false;
                }
            }
            std::size_t failing = 0;
            for (VertexId u = 0; u < 8; ++u)
                for (VertexId v = u + 1; v < 8; ++v)
                    if (!is_edge_resolving(oracle, edges, {u, v}).resolving)
                        ++failing;
            if (failing != 28) {
                note = "only " + std::to_string(failing) + "/28 pairs fail";
                return false;
            }
            // documented witnesses: {e1,e4} at (0,1), {e4,e12} at (1,1),
            // {e4,e5} at (1,1)
            struct Case {
                LandmarkSet k;
                Edge a, b;
                Representation value;
            };
            const Case cases[] = {
                {{lab.r[0], lab.r[2]}, lab.e[0], lab.e[3], {0, 1}},
                {{lab.r[1], lab.r[2]}, lab.e[3], lab.e[11], {1, 1}},
                {{lab.r[2], cube_antipode(lab.r[2])}, lab.e[3], lab.e[4], {1, 1}},
            };
            for (const auto& c : cases) {
                auto groups = edge_collision_groups(oracle, edges, c.k);
                if (!group_contains(groups, c.a, c.b)) return false;
                if (edge_representation(oracle, c.a, c.k) != c.value) return false;
                if (edge_representation(oracle, c.b, c.k) != c.value) return false;
            }
            note = "12 rows, 28 failing pairs, 3 witnesses";
            return true;
        });

    run.criterion(
        4, "16 canonical landmarks resolve CCS(2): 116 edges, 72 vertices", 1.0,
        [&](std::string& note) {
            auto g = generate_ccs(2);
            auto oracle = all_pairs(g.graph);
            auto landmarks = canonical_landmarks(g);
            std::size_t m = g.graph.edge_count();
            note = std::to_string(landmarks.size()) + " landmarks, " +
                   std::to_string(m * (m - 1) / 2) + " edge pairs";
            return landmarks.size() == 16 && m == 116 &&
                   g.graph.vertex_count() == 72 &&
                   is_edge_resolving(oracle, g.graph.edges(), landmarks)
                       .resolving &&
                   is_vertex_resolving(oracle, landmarks).resolving;
        });

    run.criterion(
        5, "112 canonical landmarks edge-resolve CCS(3): 844 edges", 30.0,
        [&](std::string& note) {
            auto g = generate_ccs(3);
            auto oracle = all_pairs(g.graph);
            auto landmarks = canonical_landmarks(g);
            note = std::to_string(landmarks.size()) + " landmarks, " +
                   std::to_string(g.graph.edge_count()) + " edges";
            return landmarks.size() == 112 && g.graph.edge_count() == 844 &&
                   g.graph.vertex_count() == 520 &&
                   is_edge_resolving(oracle, g.graph.edges(), landmarks)
                       .resolving;
        });

    run.criterion(
        6, "all 72 reduced supersets fail on CCS(2): edim >= 16", 10.0,
        [&](std::string& note) {
            auto report = certify_lower_bound(2);
            note = report.details["failing_supersets"].dump() + "/" +
                   report.details["checks"].dump() + " fail";
            return report.pass && report.details["checks"] == 72 &&
                   report.details["failing_supersets"] == 72 &&
                   report.details["implied_lower_bound"] == 16;
        });

    run.criterion(
        7, "count formulas match generated CCS(n) for n = 1..4", 0,
        [&](std::string& note) {
            const std::uint64_t cubes[] = {1, 9, 65, 457};
            const std::uint64_t vertices[] = {8, 72, 520, 3656};
            const std::uint64_t outermost[] = {1, 8, 56, 392};
            const std::uint64_t degree3[] = {8, 56, 392, 2744};
            for (unsigned n = 1; n <= 4; ++n) {
                auto expected = expected_counts(n);
                auto measured = measured_counts(generate_ccs(n));
                if (!(expected == measured)) {
                    note = "mismatch at n = " + std::to_string(n);
                    return false;
                }
                if (expected.cubes != cubes[n - 1] ||
                    expected.vertices != vertices[n - 1] ||
                    expected.degree3_vertices != degree3[n - 1] ||
                    (n >= 2 && expected.outermost_cubes != outermost[n - 1])) {
                    note = "closed form off at n = " + std::to_string(n);
                    return false;
                }
            }
            note = "cubes 1/9/65/457, vertices 8/72/520/3656";
            return true;
        });

    run.criterion(
        8, "exact = brute force on 50 seeded random graphs, both variants",
        60.0, [&](std::string& note) {
            std::mt19937_64 rng(4242);
            for (int i = 0; i < 50; ++i) {
                std::size_t n = 5 + i % 8; // 5..12
                std::size_t span = n * (n - 1) / 2 - (n - 1);
                std::size_t extra = span ? rng() % (span + 1) : 0;
                auto g = random_connected_graph(n, n - 1 + extra, 7000 + i);
                auto oracle = all_pairs(g);
                for (Variant variant : {Variant::vertex, Variant::edge}) {
                    auto m = build_matrix(oracle, g, variant);
                    auto exact = solve_exact(m, oracle, g);
                    auto brute = brute_force_min(oracle, g, variant);
                    if (!exact.optimal ||
                        exact.landmarks.size() != brute.size()) {
                        note = "graph " + std::to_string(i) + " (" +
                               variant_name(variant) + ") disagrees";
                        return false;
                    }
                    auto greedy = solve_greedy(m);
                    bool greedy_ok =
                        variant == Variant::vertex
                            ? is_vertex_resolving(oracle, greedy).resolving
                            : is_edge_resolving(oracle, g.edges(), greedy)
                                  .resolving;
                    if (!greedy_ok) {
                        note = "greedy not resolving on graph " +
                               std::to_string(i);
                        return false;
                    }
                }
            }
            note = "50 graphs, 100 exact solves";
            return true;
        });

    run.criterion(
        9, "paths P2..P10 have minimum 1 in both variants", 0,
        [&](std::string& note) {
            for (std::size_t k = 2; k <= 10; ++k) {
                std::vector<Edge> edges;
                for (VertexId v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
                auto g = Graph::build(k, std::move(edges));
                auto oracle = all_pairs(g);
                for (Variant variant : {Variant::vertex, Variant::edge}) {
                    auto m = build_matrix(oracle, g, variant);
                    if (solve_exact(m, oracle, g).landmarks.size() != 1 ||
                        brute_force_min(oracle, g, variant).size() != 1) {
                        note = "P" + std::to_string(k) + " " +
                               variant_name(variant) + " != 1";
                        return false;
                    }
                }
            }
            note = "18 path instances";
            return true;
        });

    if (run.failures == 0)
        std::printf("acceptance: all 9 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", run.failures);
    return run.failures == 0 ? 0 : 1;
}
