#pragma once

// Fixtures and helpers shared by the test binaries.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mlbp/connectivity.hpp"
#include "mlbp/graph.hpp"
#include "mlbp/incremental_blocks.hpp"

namespace mlbp::testing {

inline LabeledGraph triangle() { return build_graph(3, 3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}); }

inline LabeledGraph path3() { return build_graph(3, 1, {{0, 1, 0}, {1, 2, 0}}); }

// Triangles {0,1,2} and {2,3,4} sharing vertex 2, one label.
inline LabeledGraph bowtie() {
  return build_graph(5, 1, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {2, 3, 0}, {3, 4, 0}, {2, 4, 0}});
}

// Cycle 0-1-2-3-0 with labels a=0, b=1, a, b.
inline LabeledGraph c4_abab() { return build_graph(4, 2, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {3, 0, 1}}); }

// K_{2,3}: {0,1} x {2,3,4}, one label. Bi-connected, no Hamiltonian cycle.
inline LabeledGraph k23() {
  return build_graph(5, 1, {{0, 2, 0}, {0, 3, 0}, {0, 4, 0}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}});
}

/// Each unordered pair present with probability `density`, labels uniform.
inline LabeledGraph random_graph(std::size_t n, double density, std::size_t q, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<LabelId> label(0, static_cast<LabelId>(q - 1));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (keep(rng)) edges.push_back({u, v, label(rng)});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return build_graph(n, q, edges);
}

using Partition = std::vector<std::vector<std::uint32_t>>;

/// Groups indices by id (skipping kNone) into a canonical set of sorted sets.
inline Partition partition_of(const std::vector<std::uint32_t>& id_of) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t i = 0; i < id_of.size(); ++i) {
    if (id_of[i] != kNone) groups[id_of[i]].push_back(i);
  }
  Partition out;
  for (auto& [id, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

/// Host edge id of every inserted edge of `state`.
inline std::vector<EdgeId> host_ids(const LabeledGraph& g, const IncrementalState& state) {
  const std::size_t n = g.num_vertices();
  std::vector<EdgeId> lookup(n * n, kNone);
  for (EdgeId e = 0; e < g.num_edges(); ++e) lookup[g.edge(e).u * n + g.edge(e).v] = e;
  std::vector<EdgeId> out;
  for (const auto& [u, v] : state.edges()) out.push_back(lookup[std::min(u, v) * n + std::max(u, v)]);
  return out;
}

/// Mask of the host edges currently inserted in `state`.
inline std::vector<bool> inserted_mask(const LabeledGraph& g, const IncrementalState& state) {
  std::vector<bool> mask(g.num_edges(), false);
  for (EdgeId e : host_ids(g, state)) mask[e] = true;
  return mask;
}

/// Empty string when `state` matches a from-scratch analysis of its edges,
/// otherwise a description of the first difference.
inline std::string compare_with_analyze(const LabeledGraph& g, const IncrementalState& state) {
  const std::vector<EdgeId> ids = host_ids(g, state);
  std::vector<bool> mask(g.num_edges(), false);
  for (EdgeId e : ids) mask[e] = true;
  const ConnectivityReport r = analyze(SubgraphView(g, std::move(mask)));
  const BlockCounters c = state.counters();
  if (c.components != r.num_components) return "components";
  if (c.vertex_blocks != r.num_vertex_blocks) return "vertex block count";
  if (c.edge_blocks != r.num_edge_blocks) return "edge block count";

  std::vector<EdgeId> bridges;
  for (std::size_t i : state.bridges()) bridges.push_back(ids[i]);
  std::sort(bridges.begin(), bridges.end());
  if (bridges != r.bridges) return "bridges";
  if (state.cut_vertices() != r.cut_vertices) return "cut vertices";

  std::vector<std::uint32_t> comp(g.num_vertices()), eblock(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    comp[v] = state.component_of(v);
    eblock[v] = state.edge_block_of(v);
  }
  if (partition_of(comp) != partition_of(r.component_of)) return "component partition";
  if (partition_of(eblock) != partition_of(r.edge_block_of)) return "edge-block partition";

  std::vector<std::uint32_t> vblock(g.num_edges(), kNone);
  for (std::size_t i = 0; i < ids.size(); ++i) vblock[ids[i]] = state.vertex_block_of(i);
  if (partition_of(vblock) != partition_of(r.vertex_block_of)) return "vertex-block partition";

  std::vector<VertexId> isolated;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (state.is_isolated(v)) isolated.push_back(v);
  }
  if (isolated != r.isolated_vertices) return "isolated vertices";
  return {};
}

/// Empty string when `r` satisfies the structural rules of a block
/// decomposition of `view`, otherwise the first rule broken.
inline std::string block_invariant_violation(const SubgraphView& view, const ConnectivityReport& r) {
  const LabeledGraph& g = view.graph();
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::uint32_t> distinct_vblocks;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!view.contains(e)) {
      if (r.vertex_block_of[e] != kNone) return "unselected edge has a vertex-block";
      continue;
    }
    if (r.vertex_block_of[e] == kNone) return "selected edge without vertex-block";
    ++degree[g.edge(e).u];
    ++degree[g.edge(e).v];
    distinct_vblocks.push_back(r.vertex_block_of[e]);
  }
  std::sort(distinct_vblocks.begin(), distinct_vblocks.end());
  distinct_vblocks.erase(std::unique(distinct_vblocks.begin(), distinct_vblocks.end()), distinct_vblocks.end());

  std::size_t isolated = 0;
  for (VertexId v = 0; v < n; ++v) isolated += degree[v] == 0;
  if (isolated != r.isolated_vertices.size()) return "isolated vertex list";
  if (r.num_vertex_blocks != distinct_vblocks.size() + isolated) return "vertex-block count rule";

  std::vector<std::uint32_t> eblocks;
  for (VertexId v = 0; v < n; ++v) {
    if (r.edge_block_of[v] == kNone) return "vertex without edge-block";
    eblocks.push_back(r.edge_block_of[v]);
  }
  std::sort(eblocks.begin(), eblocks.end());
  eblocks.erase(std::unique(eblocks.begin(), eblocks.end()), eblocks.end());
  if (r.num_edge_blocks != eblocks.size()) return "edge-block count rule";

  std::vector<bool> is_bridge(g.num_edges(), false);
  for (EdgeId e : r.bridges) is_bridge[e] = true;
  std::map<std::uint32_t, std::uint32_t> block_home;  // vertex-block -> edge-block
  std::map<std::uint32_t, std::size_t> block_size;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!view.contains(e)) continue;
    ++block_size[r.vertex_block_of[e]];
    if (is_bridge[e]) continue;
    const Edge& ed = g.edge(e);
    for (VertexId x : {ed.u, ed.v}) {
      auto [it, fresh] = block_home.emplace(r.vertex_block_of[e], r.edge_block_of[x]);
      if (!fresh && it->second != r.edge_block_of[x]) return "vertex-block not inside one edge-block";
    }
  }
  for (EdgeId e : r.bridges) {
    if (block_size[r.vertex_block_of[e]] != 1) return "bridge is not a singleton vertex-block";
    const Edge& ed = g.edge(e);
    if (r.edge_block_of[ed.u] == r.edge_block_of[ed.v]) return "bridge inside an edge-block";
    for (VertexId x : {ed.u, ed.v}) {
      if (degree[x] >= 2 && !std::binary_search(r.cut_vertices.begin(), r.cut_vertices.end(), x)) {
        return "bridge endpoint of degree >= 2 is not a cut-vertex";
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    std::vector<std::uint32_t> touching;
    for (const Incidence& inc : g.neighbors(v)) {
      if (view.contains(inc.edge)) touching.push_back(r.vertex_block_of[inc.edge]);
    }
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    const bool cut = std::binary_search(r.cut_vertices.begin(), r.cut_vertices.end(), v);
    if (cut != (touching.size() >= 2)) return "cut-vertex iff it touches two vertex-blocks";
  }

  const bool edge_ok = n >= 3 && r.num_components == 1 && r.bridges.empty();
  if (r.edge_biconnected != edge_ok) return "edge flag";
  if (r.vertex_biconnected != (edge_ok && r.cut_vertices.empty())) return "vertex flag";
  if (r.vertex_biconnected && !r.edge_biconnected) return "vertex implies edge";
  return {};
}

}  // namespace mlbp::testing
