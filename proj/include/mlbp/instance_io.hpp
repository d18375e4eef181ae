#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mlbp/graph.hpp"
#include "mlbp/solver_result.hpp"

namespace mlbp {

/// Problem with instance text. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kEdgeCountMismatch, kGraph };

  ParseError(Kind kind, std::size_t line, const std::string& reason)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class GenerateError : public std::runtime_error {
 public:
  enum class Kind { kDensityOutOfRange, kFeasibilityRetriesExhausted };

  GenerateError(Kind kind, const std::string& what, std::size_t attempts = 0)
      : std::runtime_error(what), kind_(kind), attempts_(attempts) {}

  Kind kind() const { return kind_; }
  std::size_t attempts() const { return attempts_; }

 private:
  Kind kind_;
  std::size_t attempts_;
};

// Instance text format:
//   '#' comment lines and blank lines are ignored, LF or CRLF endings;
//   first line "n m q", then m lines "u v c" with 0-based ids.
LabeledGraph parse_instance(std::string_view text);

/// Edges sorted by (u, v); newline-terminated.
std::string serialize_instance(const LabeledGraph& graph);

LabeledGraph read_instance_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

struct InstanceSpec {
  std::size_t n = 0;
  std::size_t q = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  std::optional<Mode> ensure_feasible;
  std::size_t max_retries = 1000;

  /// floor(density * n(n-1)/2)
  std::size_t target_edges() const;
};

/// m distinct vertex pairs drawn uniformly, labels uniform over 0..q-1.
/// With ensure_feasible, attempt k uses sub-seed seed + k until the instance
/// passes the feasibility check.
LabeledGraph generate(const InstanceSpec& spec);

enum class ResultFormat { kJson, kCsvRow };

/// Header matching serialize_result(..., kCsvRow).
inline constexpr std::string_view kResultCsvHeader = "mode,status,objective,labels,nodes,time_ms";

/// JSON: {"mode","status","labels","size","nodes_explored","time_ms"} in that
/// order, labels ascending. CSV: one row under kResultCsvHeader, labels
/// separated by spaces. Newline-terminated.
std::string serialize_result(const SolverResult& result, ResultFormat format);

}  // namespace mlbp
