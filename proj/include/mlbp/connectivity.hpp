#pragma once

#include <cstddef>
#include <vector>

#include "mlbp/graph.hpp"

namespace mlbp {

/// Static decomposition of a (sub)graph into components and blocks.
///
/// Vertex-blocks partition the selected edges; every bridge is a block of its
/// own and every isolated vertex adds one more block. Edge-blocks partition the
/// vertices and coincide with the components left after deleting all bridges.
/// Ids are assigned in discovery order: DFS roots in increasing vertex id,
/// adjacency scanned in stored order.
struct ConnectivityReport {
  std::size_t num_vertices = 0;

  std::size_t num_components = 0;
  std::vector<std::uint32_t> component_of;  // per vertex

  std::vector<EdgeId> bridges;          // ascending
  std::vector<VertexId> cut_vertices;   // ascending

  std::vector<std::uint32_t> vertex_block_of;  // per host edge; kNone if not selected
  std::vector<VertexId> isolated_vertices;     // ascending; one vertex-block each
  std::size_t num_vertex_blocks = 0;

  std::vector<std::uint32_t> edge_block_of;  // per vertex
  std::size_t num_edge_blocks = 0;

  bool edge_biconnected = false;
  bool vertex_biconnected = false;

  /// Number of selected-edge endpoint scans performed; bounded by 2m.
  std::size_t edge_scans = 0;

  std::size_t num_blocks(Mode mode) const { return mode == Mode::kEdge ? num_edge_blocks : num_vertex_blocks; }
};

ConnectivityReport analyze(const SubgraphView& view);
ConnectivityReport analyze(const LabeledGraph& graph);

bool is_biconnected(const ConnectivityReport& report, Mode mode);

}  // namespace mlbp
