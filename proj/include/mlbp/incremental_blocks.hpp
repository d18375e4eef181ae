#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlbp/graph.hpp"

namespace mlbp {

class IncrementalError : public std::runtime_error {
 public:
  enum class Kind { kEdgeAlreadyPresent, kVertexOutOfRange, kLabelOutOfRange, kSelfLoop };

  IncrementalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct BlockCounters {
  std::size_t components = 0;
  std::size_t vertex_blocks = 0;
  std::size_t edge_blocks = 0;

  std::size_t blocks(Mode mode) const { return mode == Mode::kEdge ? edge_blocks : vertex_blocks; }
  friend bool operator==(const BlockCounters&, const BlockCounters&) = default;
};

enum class InsertCase {
  kSameBlock,       // endpoints already share a vertex-block
  kJoinComponents,  // new bridge between two components
  kMergeBlocks,     // same component, blocks along the shortest path collapse
};

struct BlockDelta {
  std::ptrdiff_t components = 0;
  std::ptrdiff_t vertex_blocks = 0;
  std::ptrdiff_t edge_blocks = 0;
  InsertCase last_case = InsertCase::kSameBlock;  // for add_label: case of the final edge

  BlockDelta& operator+=(const BlockDelta& other);
};

/// Components, bridges, vertex-blocks and edge-blocks of a growing edge set.
///
/// After every insertion the state describes the same partitions as a
/// from-scratch `analyze` of the inserted edges (block ids may differ).
/// Block merges go through union-find with the smaller id surviving.
/// The state is a plain value: copying it is the rollback mechanism.
class IncrementalState {
 public:
  explicit IncrementalState(std::size_t num_vertices);

  BlockDelta add_edge(VertexId u, VertexId v);

  /// Inserts every edge of `label` in stored order. Either all edges are
  /// inserted or, on error, none.
  BlockDelta add_label(const LabeledGraph& graph, LabelId label);

  BlockCounters counters() const { return counters_; }

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return ends_.size(); }

  /// Inserted edges in insertion order, as (min, max) endpoint pairs.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return ends_; }
  bool has_edge(VertexId u, VertexId v) const;

  std::uint32_t component_of(VertexId v) const { return find(component_parent_, v); }
  std::uint32_t edge_block_of(VertexId v) const { return find(edge_block_parent_, v); }
  /// Block id of the i-th inserted edge.
  std::uint32_t vertex_block_of(std::size_t edge_index) const {
    return find(vertex_block_parent_, raw_vertex_block_[edge_index]);
  }
  bool is_bridge(std::size_t edge_index) const { return bridge_[edge_index]; }
  bool is_isolated(VertexId v) const { return adjacency_[v].empty(); }

  /// Indices (insertion order) of the current bridges.
  std::vector<std::size_t> bridges() const;
  /// Vertices incident to edges of two or more vertex-blocks, ascending.
  std::vector<VertexId> cut_vertices() const;

  friend bool operator==(const IncrementalState&, const IncrementalState&) = default;

 private:
  struct Arc {
    VertexId neighbor;
    std::uint32_t edge;  // insertion index
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  static std::uint32_t find_compress(std::vector<std::uint32_t>& parent, std::uint32_t x);
  static std::uint32_t find(const std::vector<std::uint32_t>& parent, std::uint32_t x);
  static void unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b);

  // Shortest path from `from` to `to` as insertion indices, in path order.
  std::vector<std::uint32_t> shortest_path(VertexId from, VertexId to) const;

  std::vector<std::vector<Arc>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<bool> bridge_;
  std::vector<std::uint32_t> raw_vertex_block_;  // per inserted edge, resolve through vertex_block_parent_

  std::vector<std::uint32_t> component_parent_;
  std::vector<std::uint32_t> edge_block_parent_;
  std::vector<std::uint32_t> vertex_block_parent_;

  BlockCounters counters_;
};

IncrementalState new_state(std::size_t num_vertices);
BlockCounters snapshot_counters(const IncrementalState& state);

}  // namespace mlbp
