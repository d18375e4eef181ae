#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlbp {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

enum class Mode { kEdge, kVertex };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// Error raised for malformed graph input. `kind()` tells which rule failed.
class GraphError : public std::runtime_error {
 public:
  enum class Kind { kSelfLoop, kDuplicateEdge, kVertexOutOfRange, kLabelOutOfRange, kInvalidSize };

  GraphError(Kind kind, const std::string& what, std::size_t edge_index = kNone)
      : std::runtime_error(what), kind_(kind), edge_index_(edge_index) {}
  Kind kind() const { return kind_; }
  /// Position of the offending edge in the input list, kNone if not edge-specific.
  std::size_t edge_index() const { return edge_index_; }

 private:
  Kind kind_;
  std::size_t edge_index_;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  LabelId label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable undirected simple graph with exactly one label per edge.
/// Edges are stored with u < v; edge ids are positions in the input list.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_labels() const { return num_labels_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Incidence> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  /// Edge ids carrying `label`, in stored order.
  std::span<const EdgeId> edges_with_label(LabelId label) const { return by_label_[label]; }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  friend LabeledGraph build_graph(std::size_t, std::size_t, std::span<const Edge>);

  std::size_t num_labels_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::vector<EdgeId>> by_label_;
};

/// Validates and canonicalizes the edge list. Throws GraphError.
LabeledGraph build_graph(std::size_t num_vertices, std::size_t num_labels, std::span<const Edge> edges);

inline LabeledGraph build_graph(std::size_t num_vertices, std::size_t num_labels,
                                std::initializer_list<Edge> edges) {
  return build_graph(num_vertices, num_labels, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Dense subset of label ids 0..q-1.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::size_t num_labels) : members_(num_labels, false) {}

  static LabelSet full(std::size_t num_labels);
  static LabelSet of(std::size_t num_labels, std::initializer_list<LabelId> ids);

  std::size_t universe() const { return members_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  bool contains(LabelId id) const { return id < members_.size() && members_[id]; }

  void insert(LabelId id);
  void erase(LabelId id);

  /// Member ids in ascending order.
  std::vector<LabelId> ids() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<bool> members_;
  std::size_t size_ = 0;
};

/// Cardinality first, then lexicographic order of the sorted member ids.
bool better_label_set(const LabelSet& a, const LabelSet& b);

/// The graph restricted to a subset of its edges. All vertices are retained.
class SubgraphView {
 public:
  /// Full view of `graph`.
  explicit SubgraphView(const LabeledGraph& graph);
  SubgraphView(const LabeledGraph& graph, std::vector<bool> edge_mask);

  const LabeledGraph& graph() const { return *graph_; }
  std::size_t num_vertices() const { return graph_->num_vertices(); }
  bool contains(EdgeId e) const { return mask_[e]; }
  std::size_t num_edges() const { return num_edges_; }
  const std::vector<bool>& edge_mask() const { return mask_; }

  /// Selected edge ids in ascending order.
  std::vector<EdgeId> edge_ids() const;

 private:
  const LabeledGraph* graph_;
  std::vector<bool> mask_;
  std::size_t num_edges_ = 0;
};

/// E(L): the edges whose label is in `labels`.
SubgraphView induced_subgraph(const LabeledGraph& graph, const LabelSet& labels);

/// Number of edges per label; unused labels report 0.
std::vector<std::size_t> label_frequencies(const LabeledGraph& graph);

}  // namespace mlbp
