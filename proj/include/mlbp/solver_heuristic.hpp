#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mlbp/graph.hpp"
#include "mlbp/solver_result.hpp"

namespace mlbp {

/// The host graph (or a label set handed to prune_labels) is not bi-connected.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Random stream `index` derived from `seed`. Streams are independent of the
/// order in which they are requested.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

/// One accepted label of a greedy construction.
struct GreedyStep {
  LabelId label;
  std::size_t score_before;  // components + blocks before adding
  std::size_t score_after;
  bool plateau;              // no candidate strictly decreased the score
};

/// MVCA-style construction. At each step every unused label is scored by
/// components + blocks(mode) of G(L + label); a label is drawn uniformly from
/// the `rcl_size` best strictly improving ones (the best one, smallest id on
/// ties, when `rng` is null). When nothing improves, the label with the most
/// edges is added. Stops once G(L) is bi-connected.
/// Throws InfeasibleError if the host graph is not bi-connected in `mode`.
LabelSet greedy_construct(const LabeledGraph& graph, Mode mode, Rng* rng = nullptr, std::size_t rcl_size = 1,
                          std::vector<GreedyStep>* trace = nullptr);

/// Drops labels while the set stays feasible, scanning by increasing edge
/// count (ties by id). The result is 1-minimal.
/// Throws InfeasibleError if `labels` is not feasible.
LabelSet prune_labels(const LabeledGraph& graph, const LabelSet& labels, Mode mode);

/// Deterministic greedy followed by prune_labels.
SolverResult greedy_solve(const LabeledGraph& graph, Mode mode);

struct GraspConfig {
  Mode mode = Mode::kEdge;
  std::size_t iterations = 100;
  std::size_t alpha = 3;
  std::uint64_t seed = 0;
  std::optional<std::chrono::milliseconds> time_limit;
  std::size_t threads = 1;
};

/// Multistart randomized greedy + prune + 1-swap local search. The incumbent
/// starts at greedy_solve and is replaced only by sets that are smaller, or
/// equal in size and lexicographically smaller. Without a time limit the
/// result depends only on the graph and config (not on `threads`).
SolverResult grasp(const LabeledGraph& graph, const GraspConfig& config);

/// The local search used by grasp, exposed for testing. `labels` must be
/// feasible; the result is feasible, 1-minimal and no larger.
LabelSet local_search(const LabeledGraph& graph, const LabelSet& labels, Mode mode);

}  // namespace mlbp
