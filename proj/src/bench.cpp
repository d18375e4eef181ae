#include "mlbp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mlbp/instance_io.hpp"
#include "mlbp/oracle.hpp"
#include "mlbp/solver_exact.hpp"
#include "mlbp/solver_heuristic.hpp"

namespace mlbp {

const char* to_string(Method method) {
  switch (method) {
    case Method::kExact:
      return "exact";
    case Method::kGreedy:
      return "greedy";
    case Method::kGrasp:
      return "grasp";
    case Method::kOracle:
      return "oracle";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& value) {
  std::istringstream in(value);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

template <typename T>
T number(const std::string& word, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw std::invalid_argument("plan line " + std::to_string(line) + ": bad number '" + word + "'");
  }
  return value;
}

Method parse_method(const std::string& word, std::size_t line) {
  for (Method m : {Method::kExact, Method::kGreedy, Method::kGrasp, Method::kOracle}) {
    if (word == to_string(m)) return m;
  }
  throw std::invalid_argument("plan line " + std::to_string(line) + ": unknown method '" + word + "'");
}

}  // namespace

BenchPlan parse_bench_plan(std::string_view text) {
  BenchPlan plan;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("plan line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::vector<std::string> values = words(line.substr(eq + 1));
    if (values.empty()) throw std::invalid_argument("plan line " + std::to_string(line_no) + ": empty value");
    auto single = [&] {
      if (values.size() != 1) {
        throw std::invalid_argument("plan line " + std::to_string(line_no) + ": '" + key + "' takes one value");
      }
      return values.front();
    };

    if (key == "n") {
      plan.n_values.clear();
      for (const auto& w : values) plan.n_values.push_back(number<std::size_t>(w, line_no));
    } else if (key == "q") {
      plan.q_values.clear();
      if (!(values.size() == 1 && values.front() == "n")) {
        for (const auto& w : values) plan.q_values.push_back(number<std::size_t>(w, line_no));
      }
    } else if (key == "density") {
      plan.densities.clear();
      for (const auto& w : values) plan.densities.push_back(number<double>(w, line_no));
    } else if (key == "instances") {
      plan.instances = number<std::size_t>(single(), line_no);
    } else if (key == "methods") {
      plan.methods.clear();
      for (const auto& w : values) plan.methods.push_back(parse_method(w, line_no));
    } else if (key == "mode") {
      plan.mode = parse_mode(single());
    } else if (key == "time_limit_ms") {
      plan.time_limit = std::chrono::milliseconds(number<std::int64_t>(single(), line_no));
    } else if (key == "seed") {
      plan.seed = number<std::uint64_t>(single(), line_no);
    } else if (key == "ensure") {
      const std::string v = single();
      plan.ensure = v == "none" ? std::nullopt : std::optional<Mode>(parse_mode(v));
    } else if (key == "grasp_iterations") {
      plan.grasp_iterations = number<std::size_t>(single(), line_no);
    } else if (key == "grasp_alpha") {
      plan.grasp_alpha = number<std::size_t>(single(), line_no);
    } else if (key == "jobs") {
      plan.jobs = number<std::size_t>(single(), line_no);
    } else if (key == "output") {
      plan.output = single();
    } else {
      throw std::invalid_argument("plan line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }

  if (plan.n_values.empty()) throw std::invalid_argument("plan: 'n' is required");
  if (plan.densities.empty()) throw std::invalid_argument("plan: 'density' is required");
  if (plan.methods.empty()) throw std::invalid_argument("plan: at least one method is required");
  if (plan.instances == 0) throw std::invalid_argument("plan: instances must be >= 1");
  if (plan.time_limit && plan.time_limit->count() <= 0) throw std::invalid_argument("plan: time_limit_ms must be > 0");
  if (plan.grasp_iterations == 0 || plan.grasp_alpha == 0) {
    throw std::invalid_argument("plan: grasp_iterations and grasp_alpha must be >= 1");
  }
  return plan;
}

std::string format_bench_row(const BenchRow& row) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu,%zu,%g,%llu,%s,%s,%s,%zu,%.3f,%zu", row.n, row.q, row.density,
                static_cast<unsigned long long>(row.seed), row.method.c_str(), to_string(row.mode), row.status.c_str(),
                row.objective, row.time_ms, row.nodes);
  return buf;
}

namespace {

struct Task {
  std::size_t n;
  std::size_t q;
  double density;
  std::uint64_t seed;
};

BenchRow run_method(const LabeledGraph& g, const BenchPlan& plan, const Task& task, Method method) {
  BenchRow row;
  row.n = task.n;
  row.q = task.q;
  row.density = task.density;
  row.seed = task.seed;
  row.method = to_string(method);
  row.mode = plan.mode;
  SolverResult result;
  try {
    switch (method) {
      case Method::kExact: {
        SolverConfig config;
        config.mode = plan.mode;
        config.time_limit = plan.time_limit;
        result = solve_exact(g, config);
        break;
      }
      case Method::kGreedy:
        result = greedy_solve(g, plan.mode);
        break;
      case Method::kGrasp: {
        GraspConfig config;
        config.mode = plan.mode;
        config.iterations = plan.grasp_iterations;
        config.alpha = plan.grasp_alpha;
        config.seed = task.seed;
        config.time_limit = plan.time_limit;
        result = grasp(g, config);
        break;
      }
      case Method::kOracle:
        result = oracle::brute_force_optimum(g, plan.mode);
        break;
    }
  } catch (const oracle::TooManyLabels&) {
    row.status = "skipped";
    return row;
  }
  row.status = to_string(result.status);
  row.objective = result.objective();
  row.time_ms = result.elapsed.count();
  row.nodes = result.nodes_explored;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchPlan& plan, const std::function<void(const std::string&)>& log) {
  std::vector<Task> tasks;
  for (std::size_t n : plan.n_values) {
    const std::vector<std::size_t> qs = plan.q_values.empty() ? std::vector<std::size_t>{n} : plan.q_values;
    for (std::size_t q : qs) {
      for (double d : plan.densities) {
        for (std::size_t k = 0; k < plan.instances; ++k) tasks.push_back({n, q, d, plan.seed + k});
      }
    }
  }

  std::vector<BenchRow> rows;
  std::mutex guard;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      std::vector<BenchRow> produced;
      std::optional<LabeledGraph> g;
      try {
        InstanceSpec spec{task.n, task.q, task.density, task.seed, plan.ensure};
        g = generate(spec);
      } catch (const std::exception&) {
        for (Method m : plan.methods) {
          BenchRow row;
          row.n = task.n;
          row.q = task.q;
          row.density = task.density;
          row.seed = task.seed;
          row.method = to_string(m);
          row.mode = plan.mode;
          row.status = "error";
          produced.push_back(std::move(row));
        }
      }
      if (g) {
        for (Method m : plan.methods) produced.push_back(run_method(*g, plan, task, m));
      }
      std::lock_guard lock(guard);
      for (auto& row : produced) {
        if (log) log(format_bench_row(row));
        rows.push_back(std::move(row));
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(plan.jobs, tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return std::tie(a.n, a.q, a.density, a.seed, a.method) < std::tie(b.n, b.q, b.density, b.seed, b.method);
  });
  return rows;
}

}  // namespace mlbp
