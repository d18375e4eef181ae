#include "mlbp/incremental_blocks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace mlbp {

BlockDelta& BlockDelta::operator+=(const BlockDelta& other) {
  components += other.components;
  vertex_blocks += other.vertex_blocks;
  edge_blocks += other.edge_blocks;
  last_case = other.last_case;
  return *this;
}

IncrementalState::IncrementalState(std::size_t num_vertices)
    : adjacency_(num_vertices), component_parent_(num_vertices), edge_block_parent_(num_vertices) {
  if (num_vertices == 0) throw std::invalid_argument("incremental state needs at least one vertex");
  std::iota(component_parent_.begin(), component_parent_.end(), 0U);
  std::iota(edge_block_parent_.begin(), edge_block_parent_.end(), 0U);
  counters_ = {num_vertices, num_vertices, num_vertices};
}

std::uint32_t IncrementalState::find_compress(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  std::uint32_t root = x;
  while (parent[root] != root) root = parent[root];
  while (parent[x] != root) {
    const std::uint32_t next = parent[x];
    parent[x] = root;
    x = next;
  }
  return root;
}

std::uint32_t IncrementalState::find(const std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) x = parent[x];
  return x;
}

void IncrementalState::unite(std::vector<std::uint32_t>& parent, std::uint32_t a, std::uint32_t b) {
  a = find_compress(parent, a);
  b = find_compress(parent, b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent[b] = a;
}

bool IncrementalState::has_edge(VertexId u, VertexId v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::any_of(shorter.begin(), shorter.end(), [&](const Arc& a) { return a.neighbor == other; });
}

std::vector<std::uint32_t> IncrementalState::shortest_path(VertexId from, VertexId to) const {
  std::vector<std::uint32_t> via(adjacency_.size(), kNone);  // arriving edge
  std::vector<bool> seen(adjacency_.size(), false);
  std::deque<VertexId> queue{from};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const Arc& a : adjacency_[v]) {
      if (seen[a.neighbor]) continue;
      seen[a.neighbor] = true;
      via[a.neighbor] = a.edge;
      queue.push_back(a.neighbor);
    }
  }
  std::vector<std::uint32_t> path;
  for (VertexId v = to; v != from;) {
    const std::uint32_t e = via[v];
    path.push_back(e);
    v = ends_[e].first == v ? ends_[e].second : ends_[e].first;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

BlockDelta IncrementalState::add_edge(VertexId u, VertexId v) {
  const std::size_t n = adjacency_.size();
  if (u >= n || v >= n) {
    throw IncrementalError(IncrementalError::Kind::kVertexOutOfRange,
                           "vertex out of range in (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) throw IncrementalError(IncrementalError::Kind::kSelfLoop, "self-loop at " + std::to_string(u));
  if (has_edge(u, v)) {
    throw IncrementalError(IncrementalError::Kind::kEdgeAlreadyPresent,
                           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") already inserted");
  }
  if (v < u) std::swap(u, v);

  BlockDelta delta;
  const auto index = static_cast<std::uint32_t>(ends_.size());

  if (find_compress(component_parent_, u) != find_compress(component_parent_, v)) {
    delta.last_case = InsertCase::kJoinComponents;
    unite(component_parent_, u, v);
    delta.components = -1;
    // The bridge is a vertex-block of its own; isolated endpoints stop being blocks.
    delta.vertex_blocks = 1 - static_cast<std::ptrdiff_t>(adjacency_[u].empty()) -
                          static_cast<std::ptrdiff_t>(adjacency_[v].empty());
    const auto block = static_cast<std::uint32_t>(vertex_block_parent_.size());
    vertex_block_parent_.push_back(block);
    raw_vertex_block_.push_back(block);
    bridge_.push_back(true);
  } else {
    const std::vector<std::uint32_t> path = shortest_path(u, v);

    std::vector<std::uint32_t> vblocks;
    std::vector<std::uint32_t> eblocks{find_compress(edge_block_parent_, u)};
    VertexId at = u;
    for (std::uint32_t e : path) {
      vblocks.push_back(find_compress(vertex_block_parent_, raw_vertex_block_[e]));
      at = ends_[e].first == at ? ends_[e].second : ends_[e].first;
      eblocks.push_back(find_compress(edge_block_parent_, at));
    }
    std::sort(vblocks.begin(), vblocks.end());
    vblocks.erase(std::unique(vblocks.begin(), vblocks.end()), vblocks.end());
    std::sort(eblocks.begin(), eblocks.end());
    eblocks.erase(std::unique(eblocks.begin(), eblocks.end()), eblocks.end());

    if (vblocks.size() == 1) {
      delta.last_case = InsertCase::kSameBlock;
    } else {
      delta.last_case = InsertCase::kMergeBlocks;
      for (std::uint32_t b : vblocks) unite(vertex_block_parent_, vblocks.front(), b);
      for (std::uint32_t b : eblocks) unite(edge_block_parent_, eblocks.front(), b);
      for (std::uint32_t e : path) bridge_[e] = false;
      delta.vertex_blocks = 1 - static_cast<std::ptrdiff_t>(vblocks.size());
      delta.edge_blocks = 1 - static_cast<std::ptrdiff_t>(eblocks.size());
    }
    raw_vertex_block_.push_back(vblocks.front());
    bridge_.push_back(false);
  }

  ends_.emplace_back(u, v);
  adjacency_[u].push_back({v, index});
  adjacency_[v].push_back({u, index});

  counters_.components = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(counters_.components) + delta.components);
  counters_.vertex_blocks =
      static_cast<std::size_t>(static_cast<std::ptrdiff_t>(counters_.vertex_blocks) + delta.vertex_blocks);
  counters_.edge_blocks = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(counters_.edge_blocks) + delta.edge_blocks);
  return delta;
}

BlockDelta IncrementalState::add_label(const LabeledGraph& graph, LabelId label) {
  if (label >= graph.num_labels()) {
    throw IncrementalError(IncrementalError::Kind::kLabelOutOfRange, "label " + std::to_string(label) + " out of range");
  }
  if (graph.num_vertices() != adjacency_.size()) throw std::invalid_argument("graph does not match state size");
  const auto edges = graph.edges_with_label(label);
  for (EdgeId e : edges) {
    if (has_edge(graph.edge(e).u, graph.edge(e).v)) {
      throw IncrementalError(IncrementalError::Kind::kEdgeAlreadyPresent,
                             "edge (" + std::to_string(graph.edge(e).u) + "," + std::to_string(graph.edge(e).v) +
                                 ") of label " + std::to_string(label) + " already inserted");
    }
  }
  BlockDelta total;
  for (EdgeId e : edges) total += add_edge(graph.edge(e).u, graph.edge(e).v);
  return total;
}

std::vector<std::size_t> IncrementalState::bridges() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bridge_.size(); ++i) {
    if (bridge_[i]) out.push_back(i);
  }
  return out;
}

std::vector<VertexId> IncrementalState::cut_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < adjacency_.size(); ++v) {
    const auto& arcs = adjacency_[v];
    if (arcs.empty()) continue;
    const std::uint32_t first = vertex_block_of(arcs.front().edge);
    if (std::any_of(arcs.begin() + 1, arcs.end(), [&](const Arc& a) { return vertex_block_of(a.edge) != first; })) {
      out.push_back(v);
    }
  }
  return out;
}

IncrementalState new_state(std::size_t num_vertices) { return IncrementalState(num_vertices); }

BlockCounters snapshot_counters(const IncrementalState& state) { return state.counters(); }

}  // namespace mlbp
