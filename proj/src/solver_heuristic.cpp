#include "mlbp/solver_heuristic.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "mlbp/incremental_blocks.hpp"
#include "mlbp/solver_exact.hpp"

namespace mlbp {

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

std::size_t score(const BlockCounters& c, Mode mode) { return c.components + c.blocks(mode); }

bool reached(const BlockCounters& c, Mode mode, std::size_t n) { return n >= 3 && score(c, mode) == 2; }

// Labels of `labels` by increasing edge count, ties by id.
std::vector<LabelId> by_increasing_frequency(const LabelSet& labels, const std::vector<std::size_t>& freq) {
  std::vector<LabelId> ids = labels.ids();
  std::stable_sort(ids.begin(), ids.end(), [&](LabelId a, LabelId b) { return freq[a] < freq[b]; });
  return ids;
}

// Greedy completion of `start`. Returns nullopt when every allowed label has
// been added and G(L) is still not bi-connected.
std::optional<LabelSet> complete_greedy(const LabeledGraph& graph, Mode mode, LabelSet labels,
                                        std::optional<LabelId> excluded, Rng* rng, std::size_t rcl_size,
                                        std::vector<GreedyStep>* trace) {
  const std::size_t n = graph.num_vertices();
  IncrementalState state(n);
  for (LabelId l : labels.ids()) state.add_label(graph, l);

  struct Candidate {
    LabelId label;
    std::size_t score;
    IncrementalState after;
  };

  while (!reached(state.counters(), mode, n)) {
    const std::size_t current = score(state.counters(), mode);
    std::vector<Candidate> candidates;
    for (LabelId l = 0; l < graph.num_labels(); ++l) {
      if (labels.contains(l) || l == excluded || graph.edges_with_label(l).empty()) continue;
      IncrementalState trial = state;
      trial.add_label(graph, l);
      candidates.push_back({l, score(trial.counters(), mode), std::move(trial)});
    }
    if (candidates.empty()) return std::nullopt;

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) { return a.score < b.score; });
    const auto improving = static_cast<std::size_t>(
        std::count_if(candidates.begin(), candidates.end(), [&](const Candidate& c) { return c.score < current; }));

    std::size_t pick = 0;
    bool plateau = false;
    if (improving == 0) {
      plateau = true;
      for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto more = graph.edges_with_label(candidates[i].label).size();
        const auto best = graph.edges_with_label(candidates[pick].label).size();
        if (more > best || (more == best && candidates[i].label < candidates[pick].label)) pick = i;
      }
    } else if (rng != nullptr && rcl_size > 1) {
      const std::size_t rcl = std::min(rcl_size, improving);
      pick = std::uniform_int_distribution<std::size_t>(0, rcl - 1)(*rng);
    }

    if (trace != nullptr) trace->push_back({candidates[pick].label, current, candidates[pick].score, plateau});
    labels.insert(candidates[pick].label);
    state = std::move(candidates[pick].after);
  }
  return labels;
}

}  // namespace

LabelSet greedy_construct(const LabeledGraph& graph, Mode mode, Rng* rng, std::size_t rcl_size,
                          std::vector<GreedyStep>* trace) {
  if (!feasibility_check(graph, mode)) {
    throw InfeasibleError(std::string("host graph is not ") + to_string(mode) + "-bi-connected");
  }
  auto result = complete_greedy(graph, mode, LabelSet(graph.num_labels()), std::nullopt, rng, rcl_size, trace);
  // A feasible host always completes: the full label set is bi-connected.
  return *result;
}

LabelSet prune_labels(const LabeledGraph& graph, const LabelSet& labels, Mode mode) {
  if (!is_feasible(graph, labels, mode)) throw InfeasibleError("cannot prune an infeasible label set");
  LabelSet kept = labels;
  // Feasibility is monotone in the edge set, so one pass leaves a 1-minimal set.
  for (LabelId l : by_increasing_frequency(labels, label_frequencies(graph))) {
    kept.erase(l);
    if (!is_feasible(graph, kept, mode)) kept.insert(l);
  }
  return kept;
}

SolverResult greedy_solve(const LabeledGraph& graph, Mode mode) {
  const auto start = std::chrono::steady_clock::now();
  SolverResult result;
  result.mode = mode;
  result.labels = LabelSet(graph.num_labels());
  if (feasibility_check(graph, mode)) {
    result.labels = prune_labels(graph, greedy_construct(graph, mode), mode);
    result.status = SolveStatus::kFeasible;
    result.nodes_explored = 1;
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

LabelSet local_search(const LabeledGraph& graph, const LabelSet& labels, Mode mode) {
  const auto freq = label_frequencies(graph);
  LabelSet best = prune_labels(graph, labels, mode);
  bool improved = true;
  while (improved) {
    improved = false;
    for (LabelId l : by_increasing_frequency(best, freq)) {
      LabelSet without = best;
      without.erase(l);
      auto repaired = complete_greedy(graph, mode, without, l, nullptr, 1, nullptr);
      if (!repaired) continue;
      LabelSet candidate = prune_labels(graph, *repaired, mode);
      if (candidate.size() < best.size()) {
        best = std::move(candidate);
        improved = true;
        break;
      }
    }
  }
  return best;
}

SolverResult grasp(const LabeledGraph& graph, const GraspConfig& config) {
  if (config.iterations == 0 || config.alpha == 0) throw std::invalid_argument("grasp needs iterations >= 1, alpha >= 1");
  const auto start = std::chrono::steady_clock::now();

  SolverResult result = greedy_solve(graph, config.mode);
  if (result.status == SolveStatus::kInfeasible) {
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

  std::mutex guard;
  LabelSet best = result.labels;
  std::atomic<std::size_t> next_iteration{0};
  std::atomic<std::size_t> executed{0};

  auto out_of_time = [&] {
    return config.time_limit && std::chrono::steady_clock::now() - start >= *config.time_limit;
  };

  auto worker = [&] {
    while (true) {
      const std::size_t i = next_iteration.fetch_add(1);
      if (i >= config.iterations || out_of_time()) return;
      Rng rng = make_stream(config.seed, i);
      const LabelSet built = *complete_greedy(graph, config.mode, LabelSet(graph.num_labels()), std::nullopt, &rng,
                                              config.alpha, nullptr);
      LabelSet candidate = local_search(graph, built, config.mode);
      ++executed;
      std::lock_guard lock(guard);
      if (better_label_set(candidate, best)) best = std::move(candidate);
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, config.iterations));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.labels = std::move(best);
  result.nodes_explored = executed.load();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace mlbp
