#pragma once

#include <chrono>
#include <cstddef>
#include <optional>

#include "mlbp/graph.hpp"
#include "mlbp/solver_result.hpp"

namespace mlbp {

/// True when G(labels) is bi-connected in `mode`.
bool is_feasible(const LabeledGraph& graph, const LabelSet& labels, Mode mode);

/// True when the whole host graph is bi-connected in `mode`; otherwise no
/// label set can be.
bool feasibility_check(const LabeledGraph& graph, Mode mode);

struct SolverConfig {
  Mode mode = Mode::kEdge;
  std::optional<std::chrono::milliseconds> time_limit;
  std::optional<std::size_t> node_limit;
  bool seed_incumbent_with_greedy = true;
  // Off: no cardinality prune, no lookahead, zero-edge labels are branched
  // on, and feasible nodes are still expanded. Only useful for testing.
  bool enable_pruning = true;
};

/// Depth-first branch-and-prune over label subsets.
///
/// Labels are ordered by decreasing edge count (ties by id) and every node
/// extends its set only with labels later in that order, so each subset is
/// visited at most once. The result is the first minimum-size feasible set in
/// that enumeration order, independently of incumbent seeding. When a limit
/// stops the search the best set found so far is returned with status
/// kFeasible.
SolverResult solve_exact(const LabeledGraph& graph, const SolverConfig& config);

}  // namespace mlbp
