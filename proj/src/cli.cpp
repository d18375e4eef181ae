#include "mlbp/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "mlbp/bench.hpp"
#include "mlbp/connectivity.hpp"
#include "mlbp/instance_io.hpp"
#include "mlbp/solver_exact.hpp"
#include "mlbp/solver_heuristic.hpp"

namespace mlbp {
namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInfeasible = 2;
constexpr int kNotBiconnected = 3;
constexpr int kLimitHit = 4;

const std::map<std::string, Mode> kModes{{"edge", Mode::kEdge}, {"vertex", Mode::kVertex}};
const std::map<std::string, ResultFormat> kFormats{{"json", ResultFormat::kJson}, {"csv", ResultFormat::kCsvRow}};

void print_result(std::ostream& out, const SolverResult& result, ResultFormat format) {
  if (format == ResultFormat::kCsvRow) out << kResultCsvHeader << '\n';
  out << serialize_result(result, format);
}

void print_report(std::ostream& out, const LabeledGraph& g, const ConnectivityReport& r) {
  out << "vertices: " << g.num_vertices() << '\n'
      << "edges: " << g.num_edges() << '\n'
      << "labels: " << g.num_labels() << '\n'
      << "components: " << r.num_components << '\n'
      << "bridges: " << r.bridges.size() << '\n'
      << "cut_vertices: " << r.cut_vertices.size() << '\n'
      << "vertex_blocks: " << r.num_vertex_blocks << '\n'
      << "edge_blocks: " << r.num_edge_blocks << '\n'
      << "edge_biconnected: " << (r.edge_biconnected ? "true" : "false") << '\n'
      << "vertex_biconnected: " << (r.vertex_biconnected ? "true" : "false") << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum labelling bi-connectivity solvers"};
  app.require_subcommand(1);
  app.footer(std::string("Result CSV header: ") + std::string(kResultCsvHeader) +
             "\nBench CSV header: " + std::string(kBenchCsvHeader) + "\n" + std::string(kBenchPlanHelp) +
             "Exit codes: 0 ok, 1 usage/IO error, 2 infeasible, 3 not bi-connected (check), 4 limit hit (solve).");

  std::string file;
  Mode mode = Mode::kEdge;
  ResultFormat format = ResultFormat::kJson;

  auto* check = app.add_subcommand("check", "Print the block structure of an instance");
  check->add_option("file", file, "Instance file")->required();
  check->add_option("--mode", mode, "edge or vertex")->transform(CLI::CheckedTransformer(kModes));

  std::int64_t time_limit_ms = 0;
  bool no_greedy_seed = false;
  auto* solve = app.add_subcommand("solve", "Exact branch-and-prune search");
  solve->add_option("file", file, "Instance file")->required();
  solve->add_option("--mode", mode, "edge or vertex")->required()->transform(CLI::CheckedTransformer(kModes));
  solve->add_option("--time-limit", time_limit_ms, "Time limit in milliseconds")->check(CLI::PositiveNumber);
  solve->add_flag("--no-greedy-seed", no_greedy_seed, "Start without a greedy incumbent");
  solve->add_option("--format", format, "json or csv")->transform(CLI::CheckedTransformer(kFormats));

  auto* greedy = app.add_subcommand("greedy", "Deterministic greedy construction + pruning");
  greedy->add_option("file", file, "Instance file")->required();
  greedy->add_option("--mode", mode, "edge or vertex")->required()->transform(CLI::CheckedTransformer(kModes));
  greedy->add_option("--format", format, "json or csv")->transform(CLI::CheckedTransformer(kFormats));

  GraspConfig grasp_config;
  auto* grasp_cmd = app.add_subcommand("grasp", "GRASP metaheuristic");
  grasp_cmd->add_option("file", file, "Instance file")->required();
  grasp_cmd->add_option("--mode", mode, "edge or vertex")->required()->transform(CLI::CheckedTransformer(kModes));
  grasp_cmd->add_option("--iterations", grasp_config.iterations, "Multistart iterations")
      ->default_val(100)
      ->check(CLI::PositiveNumber);
  grasp_cmd->add_option("--alpha", grasp_config.alpha, "Restricted candidate list length")
      ->default_val(3)
      ->check(CLI::PositiveNumber);
  grasp_cmd->add_option("--seed", grasp_config.seed, "Random seed")->default_val(0);
  grasp_cmd->add_option("--threads", grasp_config.threads, "Worker threads")->default_val(1)->check(CLI::PositiveNumber);
  grasp_cmd->add_option("--time-limit", time_limit_ms, "Time limit in milliseconds")->check(CLI::PositiveNumber);
  grasp_cmd->add_option("--format", format, "json or csv")->transform(CLI::CheckedTransformer(kFormats));

  InstanceSpec spec;
  std::string ensure = "none";
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", spec.n, "Vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--labels", spec.q, "Labels")->required()->check(CLI::PositiveNumber);
  gen->add_option("--density", spec.density, "Edge density in (0,1]")->required();
  gen->add_option("--seed", spec.seed, "Random seed")->default_val(0);
  gen->add_option("--ensure", ensure, "none, edge or vertex")->check(CLI::IsMember({"none", "edge", "vertex"}));
  gen->add_option("--max-retries", spec.max_retries, "Attempts when --ensure is set")->default_val(1000);
  gen->add_option("-o,--output", output, "Output file")->required();

  std::string plan_file;
  std::string csv_file;
  std::size_t jobs = 0;
  auto* bench = app.add_subcommand("bench", "Run a benchmark plan");
  bench->add_option("--plan", plan_file, "Plan file")->required();
  bench->add_option("-o,--output", csv_file, "CSV output file");
  bench->add_option("--jobs", jobs, "Parallel instances (overrides the plan)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) {
      const LabeledGraph g = read_instance_file(file);
      const ConnectivityReport report = analyze(g);
      print_report(out, g, report);
      return is_biconnected(report, mode) ? kOk : kNotBiconnected;
    }
    if (*solve) {
      const LabeledGraph g = read_instance_file(file);
      SolverConfig config;
      config.mode = mode;
      if (time_limit_ms > 0) config.time_limit = std::chrono::milliseconds(time_limit_ms);
      config.seed_incumbent_with_greedy = !no_greedy_seed;
      const SolverResult result = solve_exact(g, config);
      print_result(out, result, format);
      switch (result.status) {
        case SolveStatus::kOptimal:
          return kOk;
        case SolveStatus::kInfeasible:
          return kInfeasible;
        case SolveStatus::kFeasible:
          return kLimitHit;
      }
    }
    if (*greedy) {
      const LabeledGraph g = read_instance_file(file);
      const SolverResult result = greedy_solve(g, mode);
      print_result(out, result, format);
      return result.status == SolveStatus::kInfeasible ? kInfeasible : kOk;
    }
    if (*grasp_cmd) {
      const LabeledGraph g = read_instance_file(file);
      grasp_config.mode = mode;
      if (time_limit_ms > 0) grasp_config.time_limit = std::chrono::milliseconds(time_limit_ms);
      const SolverResult result = grasp(g, grasp_config);
      print_result(out, result, format);
      return result.status == SolveStatus::kInfeasible ? kInfeasible : kOk;
    }
    if (*gen) {
      if (ensure != "none") spec.ensure_feasible = parse_mode(ensure);
      write_text_file(output, serialize_instance(generate(spec)));
      return kOk;
    }
    if (*bench) {
      std::ifstream in(plan_file);
      if (!in) throw std::runtime_error("cannot open " + plan_file);
      BenchPlan plan = parse_bench_plan(std::string{std::istreambuf_iterator<char>(in), {}});
      if (jobs > 0) plan.jobs = jobs;
      if (!csv_file.empty()) plan.output = csv_file;
      const auto rows = run_bench(plan, [&](const std::string& line) { err << line << '\n'; });
      std::string csv = std::string(kBenchCsvHeader) + "\n";
      for (const auto& row : rows) csv += format_bench_row(row) + "\n";
      if (plan.output.empty()) {
        out << csv;
      } else {
        write_text_file(plan.output, csv);
      }
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mlbp
