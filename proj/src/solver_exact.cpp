#include "mlbp/solver_exact.hpp"

#include <algorithm>
#include <numeric>

#include "mlbp/connectivity.hpp"
#include "mlbp/solver_heuristic.hpp"

namespace mlbp {

bool is_feasible(const LabeledGraph& graph, const LabelSet& labels, Mode mode) {
  return is_biconnected(analyze(induced_subgraph(graph, labels)), mode);
}

bool feasibility_check(const LabeledGraph& graph, Mode mode) { return is_biconnected(analyze(graph), mode); }

namespace {

struct StopSearch {};

class BranchAndPrune {
 public:
  BranchAndPrune(const LabeledGraph& graph, const SolverConfig& config, std::chrono::steady_clock::time_point start)
      : graph_(graph), config_(config), start_(start), current_(graph.num_labels()) {
    const auto freq = label_frequencies(graph);
    for (LabelId l = 0; l < graph.num_labels(); ++l) {
      if (freq[l] > 0 || !config.enable_pruning) order_.push_back(l);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](LabelId a, LabelId b) { return freq[a] > freq[b]; });
  }

  // Feasible sets of size <= cap are accepted; `initial` is returned if the
  // search finds nothing before a limit stops it.
  void run(const LabelSet& initial) {
    incumbent_ = initial;
    cap_ = initial.size();
    try {
      explore(0);
      complete_ = true;
    } catch (const StopSearch&) {
      complete_ = false;
    }
  }

  const LabelSet& incumbent() const { return incumbent_; }
  bool complete() const { return complete_; }
  std::size_t nodes() const { return nodes_; }

 private:
  void check_limits() {
    if (config_.node_limit && nodes_ > *config_.node_limit) throw StopSearch{};
    if (config_.time_limit && std::chrono::steady_clock::now() - start_ >= *config_.time_limit) throw StopSearch{};
  }

  void explore(std::size_t next) {
    ++nodes_;
    check_limits();

    const bool feasible = is_feasible(graph_, current_, config_.mode);
    if (feasible && current_.size() <= cap_) {
      incumbent_ = current_;
      cap_ = current_.size() == 0 ? 0 : current_.size() - 1;
      if (config_.enable_pruning) return;
    }
    if (config_.enable_pruning) {
      if (feasible) return;
      // Every child has at least |L| + 1 labels.
      if (current_.size() >= cap_) return;
      LabelSet reachable = current_;
      for (std::size_t i = next; i < order_.size(); ++i) reachable.insert(order_[i]);
      if (!is_feasible(graph_, reachable, config_.mode)) return;
    }
    for (std::size_t i = next; i < order_.size(); ++i) {
      current_.insert(order_[i]);
      explore(i + 1);
      current_.erase(order_[i]);
    }
  }

  const LabeledGraph& graph_;
  const SolverConfig& config_;
  std::chrono::steady_clock::time_point start_;
  std::vector<LabelId> order_;
  LabelSet current_;
  LabelSet incumbent_;
  std::size_t cap_ = 0;
  std::size_t nodes_ = 0;
  bool complete_ = false;
};

}  // namespace

SolverResult solve_exact(const LabeledGraph& graph, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SolverResult result;
  result.mode = config.mode;
  result.labels = LabelSet(graph.num_labels());

  if (!feasibility_check(graph, config.mode)) {
    result.status = SolveStatus::kInfeasible;
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

  LabelSet initial(graph.num_labels());
  if (config.seed_incumbent_with_greedy) {
    initial = greedy_solve(graph, config.mode).labels;
  } else {
    const auto freq = label_frequencies(graph);
    for (LabelId l = 0; l < graph.num_labels(); ++l) {
      if (freq[l] > 0) initial.insert(l);
    }
  }

  BranchAndPrune search(graph, config, start);
  search.run(initial);
  result.labels = search.incumbent();
  result.status = search.complete() ? SolveStatus::kOptimal : SolveStatus::kFeasible;
  result.nodes_explored = search.nodes();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace mlbp
