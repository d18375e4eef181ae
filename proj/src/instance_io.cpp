#include "mlbp/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "mlbp/solver_exact.hpp"

namespace mlbp {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > begin) parsed.tokens.push_back(line.substr(begin, i - begin));
    }
    if (parsed.tokens.empty() || parsed.tokens.front().front() == '#') continue;
    out.push_back(std::move(parsed));
  }
  return out;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(ParseError::Kind::kMalformed, line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::uint32_t to_id(std::string_view token, std::size_t line) {
  const std::uint64_t value = to_number(token, line);
  if (value >= kNone) throw ParseError(ParseError::Kind::kMalformed, line, "id too large: " + std::string(token));
  return static_cast<std::uint32_t>(value);
}

}  // namespace

LabeledGraph parse_instance(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  if (lines.empty()) throw ParseError(ParseError::Kind::kMalformed, 0, "missing header line \"n m q\"");

  const Line& header = lines.front();
  if (header.tokens.size() != 3) {
    throw ParseError(ParseError::Kind::kMalformed, header.number, "header must be \"n m q\"");
  }
  const std::uint64_t n = to_number(header.tokens[0], header.number);
  const std::uint64_t m = to_number(header.tokens[1], header.number);
  const std::uint64_t q = to_number(header.tokens[2], header.number);

  if (lines.size() - 1 != m) {
    throw ParseError(ParseError::Kind::kEdgeCountMismatch, 0,
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 3) throw ParseError(ParseError::Kind::kMalformed, line.number, "edge line must be \"u v c\"");
    edges.push_back({to_id(line.tokens[0], line.number), to_id(line.tokens[1], line.number),
                     to_id(line.tokens[2], line.number)});
  }

  try {
    return build_graph(n, q, edges);
  } catch (const GraphError& e) {
    const std::size_t line = e.edge_index() == kNone ? header.number : lines[e.edge_index() + 1].number;
    throw ParseError(ParseError::Kind::kGraph, line, e.what());
  }
}

std::string serialize_instance(const LabeledGraph& graph) {
  std::vector<Edge> edges = graph.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  std::ostringstream out;
  out << graph.num_vertices() << ' ' << edges.size() << ' ' << graph.num_labels() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << ' ' << e.label << '\n';
  return out.str();
}

LabeledGraph read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_instance(text);
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::size_t InstanceSpec::target_edges() const {
  const double pairs = static_cast<double>(n) * static_cast<double>(n - (n > 0 ? 1 : 0)) / 2.0;
  return static_cast<std::size_t>(std::floor(density * pairs));
}

LabeledGraph generate(const InstanceSpec& spec) {
  if (!(spec.density > 0.0 && spec.density <= 1.0)) {
    throw GenerateError(GenerateError::Kind::kDensityOutOfRange, "density must be in (0, 1]");
  }
  if (spec.n == 0 || spec.q == 0) throw std::invalid_argument("generate needs n >= 1 and q >= 1");

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(spec.n * (spec.n - 1) / 2);
  for (VertexId u = 0; u < spec.n; ++u) {
    for (VertexId v = u + 1; v < spec.n; ++v) pairs.emplace_back(u, v);
  }
  const std::size_t m = std::min(spec.target_edges(), pairs.size());

  const std::size_t attempts = spec.ensure_feasible ? std::max<std::size_t>(1, spec.max_retries) : 1;
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    std::mt19937_64 rng(spec.seed + attempt);
    std::vector<std::pair<VertexId, VertexId>> chosen;
    chosen.reserve(m);
    std::sample(pairs.begin(), pairs.end(), std::back_inserter(chosen), m, rng);
    std::uniform_int_distribution<LabelId> label(0, static_cast<LabelId>(spec.q - 1));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (auto [u, v] : chosen) edges.push_back({u, v, label(rng)});

    LabeledGraph g = build_graph(spec.n, spec.q, edges);
    if (!spec.ensure_feasible || feasibility_check(g, *spec.ensure_feasible)) return g;
  }
  throw GenerateError(GenerateError::Kind::kFeasibilityRetriesExhausted,
                      "no " + std::string(to_string(*spec.ensure_feasible)) + "-bi-connected instance after " +
                          std::to_string(attempts) + " attempts",
                      attempts);
}

std::string serialize_result(const SolverResult& result, ResultFormat format) {
  const std::vector<LabelId> labels = result.labels.ids();
  if (format == ResultFormat::kJson) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(result.mode);
    j["status"] = to_string(result.status);
    j["labels"] = labels;
    j["size"] = labels.size();
    j["nodes_explored"] = result.nodes_explored;
    j["time_ms"] = result.elapsed.count();
    return j.dump() + "\n";
  }
  std::ostringstream out;
  out << to_string(result.mode) << ',' << to_string(result.status) << ',' << labels.size() << ',';
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? " " : "") << labels[i];
  char time_ms[32];
  std::snprintf(time_ms, sizeof time_ms, "%.3f", result.elapsed.count());
  out << ',' << result.nodes_explored << ',' << time_ms << '\n';
  return out.str();
}

}  // namespace mlbp
