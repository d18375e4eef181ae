#include "mlbp/connectivity.hpp"

#include <algorithm>
#include <deque>

namespace mlbp {
namespace {

struct DfsFrame {
  VertexId vertex;
  std::size_t next = 0;  // position in adjacency
};

struct DfsScratch {
  explicit DfsScratch(std::size_t n)
      : depth(n, kNone), lowpoint(n, 0), parent_edge(n, kNone), tree_children(n, 0) {}

  std::vector<std::uint32_t> depth;  // kNone = unvisited
  std::vector<std::uint32_t> lowpoint;
  std::vector<EdgeId> parent_edge;
  std::vector<std::uint32_t> tree_children;
  std::vector<EdgeId> edge_stack;
  std::vector<DfsFrame> frames;
};

// Edge-blocks are the components of the view with its bridges removed.
void label_edge_blocks(const SubgraphView& view, const std::vector<bool>& is_bridge, ConnectivityReport& report) {
  const LabeledGraph& g = view.graph();
  const std::size_t n = g.num_vertices();
  report.edge_block_of.assign(n, kNone);
  std::deque<VertexId> queue;
  std::uint32_t next_id = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (report.edge_block_of[root] != kNone) continue;
    report.edge_block_of[root] = next_id;
    queue.push_back(root);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.neighbors(v)) {
        if (!view.contains(inc.edge)) continue;
        ++report.edge_scans;
        if (is_bridge[inc.edge] || report.edge_block_of[inc.neighbor] != kNone) continue;
        report.edge_block_of[inc.neighbor] = next_id;
        queue.push_back(inc.neighbor);
      }
    }
    ++next_id;
  }
  report.num_edge_blocks = next_id;
}

}  // namespace

ConnectivityReport analyze(const SubgraphView& view) {
  const LabeledGraph& g = view.graph();
  const std::size_t n = g.num_vertices();

  ConnectivityReport report;
  report.num_vertices = n;
  report.component_of.assign(n, kNone);
  report.vertex_block_of.assign(g.num_edges(), kNone);

  DfsScratch s(n);
  std::vector<bool> is_bridge(g.num_edges(), false);
  std::vector<bool> is_cut(n, false);
  std::uint32_t num_edge_partition_blocks = 0;

  auto close_block = [&](EdgeId last) {
    while (true) {
      const EdgeId e = s.edge_stack.back();
      s.edge_stack.pop_back();
      report.vertex_block_of[e] = num_edge_partition_blocks;
      if (e == last) break;
    }
    ++num_edge_partition_blocks;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (s.depth[root] != kNone) continue;
    const auto component = static_cast<std::uint32_t>(report.num_components++);
    s.depth[root] = 0;
    s.lowpoint[root] = 0;
    report.component_of[root] = component;
    s.frames.push_back({root});

    while (!s.frames.empty()) {
      DfsFrame& frame = s.frames.back();
      const VertexId v = frame.vertex;
      const auto adj = g.neighbors(v);

      bool descended = false;
      while (frame.next < adj.size()) {
        const Incidence inc = adj[frame.next++];
        if (!view.contains(inc.edge) || inc.edge == s.parent_edge[v]) continue;
        ++report.edge_scans;
        const VertexId w = inc.neighbor;
        if (s.depth[w] == kNone) {
          s.depth[w] = s.depth[v] + 1;
          s.lowpoint[w] = s.depth[w];
          s.parent_edge[w] = inc.edge;
          report.component_of[w] = component;
          ++s.tree_children[v];
          s.edge_stack.push_back(inc.edge);
          s.frames.push_back({w});  // invalidates `frame`
          descended = true;
          break;
        }
        if (s.depth[w] < s.depth[v]) {
          // Back edge towards an ancestor. The reverse direction is skipped below.
          s.lowpoint[v] = std::min(s.lowpoint[v], s.depth[w]);
          s.edge_stack.push_back(inc.edge);
        }
      }
      if (descended) continue;

      s.frames.pop_back();
      if (v == root) {
        if (s.tree_children[v] > 1) is_cut[v] = true;
        continue;
      }
      const EdgeId tree_edge = s.parent_edge[v];
      const Edge& te = g.edge(tree_edge);
      const VertexId parent = te.u == v ? te.v : te.u;
      s.lowpoint[parent] = std::min(s.lowpoint[parent], s.lowpoint[v]);
      if (s.lowpoint[v] >= s.depth[parent]) {
        if (parent != root) is_cut[parent] = true;
        close_block(tree_edge);
      }
      if (s.lowpoint[v] > s.depth[parent]) is_bridge[tree_edge] = true;
    }
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_bridge[e]) report.bridges.push_back(e);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (is_cut[v]) report.cut_vertices.push_back(v);
    bool isolated = true;
    for (const Incidence& inc : g.neighbors(v)) {
      if (view.contains(inc.edge)) {
        isolated = false;
        break;
      }
    }
    if (isolated) report.isolated_vertices.push_back(v);
  }
  report.num_vertex_blocks = num_edge_partition_blocks + report.isolated_vertices.size();

  label_edge_blocks(view, is_bridge, report);

  report.edge_biconnected = n >= 3 && report.num_components == 1 && report.bridges.empty();
  report.vertex_biconnected = report.edge_biconnected && report.cut_vertices.empty();
  return report;
}

ConnectivityReport analyze(const LabeledGraph& graph) { return analyze(SubgraphView(graph)); }

bool is_biconnected(const ConnectivityReport& report, Mode mode) {
  return mode == Mode::kEdge ? report.edge_biconnected : report.vertex_biconnected;
}

}  // namespace mlbp
