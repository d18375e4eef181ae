#pragma once

#include <chrono>
#include <cstddef>

#include "mlbp/graph.hpp"

namespace mlbp {

enum class SolveStatus { kOptimal, kFeasible, kInfeasible };

const char* to_string(SolveStatus status);

struct SolverResult {
  Mode mode = Mode::kEdge;
  SolveStatus status = SolveStatus::kInfeasible;
  LabelSet labels;
  std::size_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> elapsed{0};

  std::size_t objective() const { return labels.size(); }
};

}  // namespace mlbp
