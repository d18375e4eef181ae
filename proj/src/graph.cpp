#include "mlbp/graph.hpp"

#include <algorithm>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace mlbp {

const char* to_string(Mode mode) { return mode == Mode::kEdge ? "edge" : "vertex"; }

Mode parse_mode(const std::string& text) {
  if (text == "edge") return Mode::kEdge;
  if (text == "vertex") return Mode::kVertex;
  throw std::invalid_argument("unknown mode '" + text + "' (expected edge or vertex)");
}

LabeledGraph build_graph(std::size_t num_vertices, std::size_t num_labels, std::span<const Edge> edges) {
  if (num_vertices == 0 || num_vertices > kNone) {
    throw GraphError(GraphError::Kind::kInvalidSize, "vertex count must be in [1, 2^32-1)");
  }
  if (num_labels == 0 || num_labels > kNone) {
    throw GraphError(GraphError::Kind::kInvalidSize, "label count must be in [1, 2^32-1)");
  }

  LabeledGraph g;
  g.num_labels_ = num_labels;
  g.edges_.reserve(edges.size());
  g.adjacency_.resize(num_vertices);
  g.by_label_.resize(num_labels);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& raw = edges[i];
    if (raw.u >= num_vertices || raw.v >= num_vertices) {
      throw GraphError(GraphError::Kind::kVertexOutOfRange,
                       "vertex out of range in edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) + ")", i);
    }
    if (raw.u == raw.v) {
      throw GraphError(GraphError::Kind::kSelfLoop, "self-loop at vertex " + std::to_string(raw.u), i);
    }
    if (raw.label >= num_labels) {
      throw GraphError(GraphError::Kind::kLabelOutOfRange, "label " + std::to_string(raw.label) + " out of range", i);
    }
    Edge e{std::min(raw.u, raw.v), std::max(raw.u, raw.v), raw.label};
    const std::uint64_t key = (static_cast<std::uint64_t>(e.u) << 32) | e.v;
    if (!seen.insert(key).second) {
      throw GraphError(GraphError::Kind::kDuplicateEdge,
                       "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")", i);
    }
    const auto id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, id});
    g.adjacency_[e.v].push_back({e.u, id});
    g.by_label_[e.label].push_back(id);
  }
  return g;
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_labels_ != b.num_labels_) return false;
  auto sorted = [](std::vector<Edge> es) {
    std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) {
      return std::tie(x.u, x.v, x.label) < std::tie(y.u, y.v, y.label);
    });
    return es;
  };
  return sorted(a.edges_) == sorted(b.edges_);
}

LabelSet LabelSet::full(std::size_t num_labels) {
  LabelSet s(num_labels);
  for (LabelId i = 0; i < num_labels; ++i) s.insert(i);
  return s;
}

LabelSet LabelSet::of(std::size_t num_labels, std::initializer_list<LabelId> ids) {
  LabelSet s(num_labels);
  for (LabelId i : ids) s.insert(i);
  return s;
}

void LabelSet::insert(LabelId id) {
  if (id >= members_.size()) throw std::out_of_range("label id " + std::to_string(id) + " out of range");
  if (!members_[id]) {
    members_[id] = true;
    ++size_;
  }
}

void LabelSet::erase(LabelId id) {
  if (id < members_.size() && members_[id]) {
    members_[id] = false;
    --size_;
  }
}

std::vector<LabelId> LabelSet::ids() const {
  std::vector<LabelId> out;
  out.reserve(size_);
  for (LabelId i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

bool better_label_set(const LabelSet& a, const LabelSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids() < b.ids();
}

SubgraphView::SubgraphView(const LabeledGraph& graph)
    : graph_(&graph), mask_(graph.num_edges(), true), num_edges_(graph.num_edges()) {}

SubgraphView::SubgraphView(const LabeledGraph& graph, std::vector<bool> edge_mask)
    : graph_(&graph), mask_(std::move(edge_mask)) {
  if (mask_.size() != graph.num_edges()) throw std::invalid_argument("edge mask size does not match graph");
  num_edges_ = static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<EdgeId> SubgraphView::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(num_edges_);
  for (EdgeId e = 0; e < mask_.size(); ++e) {
    if (mask_[e]) out.push_back(e);
  }
  return out;
}

SubgraphView induced_subgraph(const LabeledGraph& graph, const LabelSet& labels) {
  std::vector<bool> mask(graph.num_edges(), false);
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    mask[e] = labels.contains(graph.edge(e).label);
  }
  return SubgraphView(graph, std::move(mask));
}

std::vector<std::size_t> label_frequencies(const LabeledGraph& graph) {
  std::vector<std::size_t> counts(graph.num_labels(), 0);
  for (const Edge& e : graph.edges()) ++counts[e.label];
  return counts;
}

}  // namespace mlbp
