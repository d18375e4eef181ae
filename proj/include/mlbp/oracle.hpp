#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mlbp/graph.hpp"
#include "mlbp/solver_result.hpp"

// Slow reference implementations used as ground truth by the test suites.
// Nothing here shares code with the connectivity or solver modules.
namespace mlbp::oracle {

class TooManyLabels : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxEnumerableLabels = 24;

/// Edges whose deletion increases the number of connected components.
std::vector<EdgeId> naive_bridges(const SubgraphView& view);

/// Vertices whose deletion increases the number of components among the rest.
std::vector<VertexId> naive_cut_vertices(const SubgraphView& view);

/// Connected, n >= 3, and no naive bridge (edge mode) / no naive cut-vertex (vertex mode).
bool naive_biconnected(const SubgraphView& view, Mode mode);

/// Label subsets in order of increasing size, lexicographic within a size;
/// the first feasible one is returned. Throws TooManyLabels when q > 24 and
/// no cardinality cap is given.
SolverResult brute_force_optimum(const LabeledGraph& graph, Mode mode,
                                 std::optional<std::size_t> max_cardinality = std::nullopt);

}  // namespace mlbp::oracle
