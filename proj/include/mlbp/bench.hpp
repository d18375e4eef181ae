#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlbp/graph.hpp"

namespace mlbp {

inline constexpr std::string_view kBenchCsvHeader = "n,q,density,seed,method,mode,status,objective,time_ms,nodes";

inline constexpr std::string_view kBenchPlanHelp =
    "Plan file: one 'key = value' per line, '#' starts a comment.\n"
    "  n = 20 30            vertex counts (required)\n"
    "  q = n                label counts, or 'n' to use q = n (default n)\n"
    "  density = 0.2 0.5    edge densities in (0,1] (required)\n"
    "  instances = 5        instances per cell (default 1)\n"
    "  methods = exact greedy grasp oracle   (default exact greedy grasp)\n"
    "  mode = edge|vertex   (default edge)\n"
    "  time_limit_ms = 60000   per-run limit for exact and grasp (optional)\n"
    "  seed = 1             instance k of a cell uses seed + k (default 1)\n"
    "  ensure = none|edge|vertex   regenerate until feasible (default none)\n"
    "  grasp_iterations = 50, grasp_alpha = 3, jobs = 1\n"
    "  output = results.csv (optional; -o overrides)\n";

enum class Method { kExact, kGreedy, kGrasp, kOracle };

const char* to_string(Method method);

struct BenchPlan {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> q_values;  // empty: q = n
  std::vector<double> densities;
  std::size_t instances = 1;
  std::vector<Method> methods{Method::kExact, Method::kGreedy, Method::kGrasp};
  Mode mode = Mode::kEdge;
  std::optional<std::chrono::milliseconds> time_limit;
  std::uint64_t seed = 1;
  std::optional<Mode> ensure;
  std::size_t grasp_iterations = 50;
  std::size_t grasp_alpha = 3;
  std::size_t jobs = 1;
  std::string output;
};

/// Throws std::invalid_argument with the offending line number.
BenchPlan parse_bench_plan(std::string_view text);

struct BenchRow {
  std::size_t n = 0;
  std::size_t q = 0;
  double density = 0;
  std::uint64_t seed = 0;
  std::string method;
  Mode mode = Mode::kEdge;
  std::string status;
  std::size_t objective = 0;
  double time_ms = 0;
  std::size_t nodes = 0;
};

std::string format_bench_row(const BenchRow& row);

/// Rows sorted by (n, q, density, seed, method) whatever the job count.
/// `log`, when set, receives one line per finished row.
std::vector<BenchRow> run_bench(const BenchPlan& plan, const std::function<void(const std::string&)>& log = {});

}  // namespace mlbp
