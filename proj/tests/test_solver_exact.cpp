#include <doctest.h>

#include <random>

#include "mlbp/oracle.hpp"
#include "mlbp/solver_exact.hpp"
#include "support.hpp"

using namespace mlbp;

namespace {

SolverResult solve(const LabeledGraph& g, Mode mode, bool pruning = true, bool seeded = true) {
  SolverConfig config;
  config.mode = mode;
  config.enable_pruning = pruning;
  config.seed_incumbent_with_greedy = seeded;
  return solve_exact(g, config);
}

}  // namespace

TEST_CASE("canonical instances") {
  for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
    const auto c4 = solve(testing::c4_abab(), mode);
    CHECK(c4.status == SolveStatus::kOptimal);
    CHECK(c4.labels.ids() == std::vector<LabelId>{0, 1});
  }

  const auto tri = solve(testing::triangle(), Mode::kVertex);
  CHECK(tri.status == SolveStatus::kOptimal);
  CHECK(tri.objective() == 3);

  const auto bow_edge = solve(testing::bowtie(), Mode::kEdge);
  CHECK(bow_edge.status == SolveStatus::kOptimal);
  CHECK(bow_edge.labels.ids() == std::vector<LabelId>{0});
  const auto bow_vertex = solve(testing::bowtie(), Mode::kVertex);
  CHECK(bow_vertex.status == SolveStatus::kInfeasible);
  CHECK(bow_vertex.labels.empty());

  const auto k23 = solve(testing::k23(), Mode::kVertex);
  CHECK(k23.status == SolveStatus::kOptimal);
  CHECK(k23.objective() == 1);
}

TEST_CASE("feasibility_check") {
  CHECK(feasibility_check(testing::bowtie(), Mode::kEdge));
  CHECK_FALSE(feasibility_check(testing::bowtie(), Mode::kVertex));
  CHECK_FALSE(feasibility_check(testing::path3(), Mode::kEdge));
  CHECK_FALSE(feasibility_check(build_graph(2, 1, {{0, 1, 0}}), Mode::kEdge));
}

TEST_CASE("small or disconnected hosts are infeasible, not errors") {
  CHECK(solve(build_graph(1, 1, {}), Mode::kEdge).status == SolveStatus::kInfeasible);
  CHECK(solve(build_graph(2, 1, {{0, 1, 0}}), Mode::kVertex).status == SolveStatus::kInfeasible);
  const LabeledGraph two_triangles =
      build_graph(6, 2, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}});
  CHECK(solve(two_triangles, Mode::kEdge).status == SolveStatus::kInfeasible);
}

TEST_CASE("unused labels are never selected") {
  const LabeledGraph g = build_graph(3, 4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}});
  for (bool pruning : {true, false}) {
    const auto r = solve(g, Mode::kVertex, pruning);
    CHECK(r.labels.ids() == std::vector<LabelId>{3});
  }
}

TEST_CASE("matches brute force, with and without prunes and seeding") {
  std::mt19937_64 rng(123);
  for (int round = 0; round < 80; ++round) {
    const std::size_t n = 3 + rng() % 6;
    const std::size_t q = 1 + rng() % 6;
    const LabeledGraph g = testing::random_graph(n, std::array{0.5, 0.8}[rng() % 2], q, rng);
    for (Mode mode : {Mode::kEdge, Mode::kVertex}) {
      const auto oracle = oracle::brute_force_optimum(g, mode);
      const auto exact = solve(g, mode);
      REQUIRE(exact.status == (oracle.status == SolveStatus::kOptimal ? SolveStatus::kOptimal
                                                                      : SolveStatus::kInfeasible));
      CHECK(exact.objective() == oracle.objective());
      if (exact.status == SolveStatus::kOptimal) CHECK(is_feasible(g, exact.labels, mode));

      const auto unpruned = solve(g, mode, false);
      const auto unseeded = solve(g, mode, true, false);
      CHECK(unpruned.objective() == exact.objective());
      CHECK(unpruned.labels == exact.labels);
      CHECK(unseeded.labels == exact.labels);
      if (exact.status == SolveStatus::kOptimal) CHECK(unpruned.nodes_explored >= exact.nodes_explored);
    }
  }
}

TEST_CASE("limits return a feasible incumbent") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 20; ++round) {
    const LabeledGraph g = testing::random_graph(12, 0.8, 10, rng);
    if (!feasibility_check(g, Mode::kEdge)) continue;
    for (bool seeded : {true, false}) {
      SolverConfig config;
      config.mode = Mode::kEdge;
      config.node_limit = 3;
      config.seed_incumbent_with_greedy = seeded;
      const auto r = solve_exact(g, config);
      CHECK(r.status == SolveStatus::kFeasible);
      CHECK(is_feasible(g, r.labels, Mode::kEdge));
    }
  }
}

TEST_CASE("time limit stops the search") {
  std::mt19937_64 rng(5);
  LabeledGraph g;
  do {
    g = testing::random_graph(40, 0.5, 40, rng);
  } while (!feasibility_check(g, Mode::kVertex));
  SolverConfig config;
  config.mode = Mode::kVertex;
  config.time_limit = std::chrono::milliseconds(1);
  config.seed_incumbent_with_greedy = false;
  const auto r = solve_exact(g, config);
  CHECK(r.status == SolveStatus::kFeasible);
  CHECK(is_feasible(g, r.labels, Mode::kVertex));
}

TEST_CASE("deterministic") {
  std::mt19937_64 rng(9);
  const LabeledGraph g = testing::random_graph(9, 0.7, 7, rng);
  const auto a = solve(g, Mode::kEdge);
  const auto b = solve(g, Mode::kEdge);
  CHECK(a.labels == b.labels);
  CHECK(a.nodes_explored == b.nodes_explored);
  CHECK(a.status == b.status);
}
