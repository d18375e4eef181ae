#include "mlbp/oracle.hpp"

#include <chrono>
#include <numeric>

namespace mlbp::oracle {
namespace {

struct PlainGraph {
  std::size_t n = 0;
  std::vector<EdgeId> ids;                   // host edge ids of the selected edges
  std::vector<std::pair<VertexId, VertexId>> ends;
};

PlainGraph flatten(const SubgraphView& view) {
  PlainGraph p;
  p.n = view.num_vertices();
  for (EdgeId e = 0; e < view.graph().num_edges(); ++e) {
    if (!view.contains(e)) continue;
    p.ids.push_back(e);
    p.ends.emplace_back(view.graph().edge(e).u, view.graph().edge(e).v);
  }
  return p;
}

// Components of `p` after dropping edge index `skip_edge` and vertex `skip_vertex`.
std::size_t count_components(const PlainGraph& p, std::size_t skip_edge, VertexId skip_vertex) {
  std::vector<std::vector<VertexId>> adj(p.n);
  for (std::size_t i = 0; i < p.ends.size(); ++i) {
    if (i == skip_edge) continue;
    auto [a, b] = p.ends[i];
    if (a == skip_vertex || b == skip_vertex) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(p.n, false);
  std::vector<VertexId> todo;
  std::size_t count = 0;
  for (VertexId s = 0; s < p.n; ++s) {
    if (s == skip_vertex || seen[s]) continue;
    ++count;
    seen[s] = true;
    todo.push_back(s);
    while (!todo.empty()) {
      VertexId v = todo.back();
      todo.pop_back();
      for (VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
  }
  return count;
}

constexpr std::size_t kKeepAll = static_cast<std::size_t>(-1);

}  // namespace

std::vector<EdgeId> naive_bridges(const SubgraphView& view) {
  const PlainGraph p = flatten(view);
  const std::size_t base = count_components(p, kKeepAll, kNone);
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < p.ends.size(); ++i) {
    if (count_components(p, i, kNone) > base) out.push_back(p.ids[i]);
  }
  return out;
}

std::vector<VertexId> naive_cut_vertices(const SubgraphView& view) {
  const PlainGraph p = flatten(view);
  const std::size_t base = count_components(p, kKeepAll, kNone);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < p.n; ++v) {
    if (count_components(p, kKeepAll, v) > base) out.push_back(v);
  }
  return out;
}

bool naive_biconnected(const SubgraphView& view, Mode mode) {
  if (view.num_vertices() < 3) return false;
  const PlainGraph p = flatten(view);
  if (count_components(p, kKeepAll, kNone) != 1) return false;
  return mode == Mode::kEdge ? naive_bridges(view).empty() : naive_cut_vertices(view).empty();
}

SolverResult brute_force_optimum(const LabeledGraph& graph, Mode mode, std::optional<std::size_t> max_cardinality) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t q = graph.num_labels();
  if (!max_cardinality && q > kMaxEnumerableLabels) {
    throw TooManyLabels("brute force needs q <= " + std::to_string(kMaxEnumerableLabels) + " (got " +
                        std::to_string(q) + ")");
  }
  const std::size_t cap = std::min(q, max_cardinality.value_or(q));

  SolverResult result;
  result.mode = mode;
  result.labels = LabelSet(q);

  std::vector<LabelId> combo;
  for (std::size_t k = 0; k <= cap; ++k) {
    combo.resize(k);
    std::iota(combo.begin(), combo.end(), LabelId{0});
    while (true) {
      ++result.nodes_explored;
      LabelSet candidate(q);
      for (LabelId l : combo) candidate.insert(l);
      if (naive_biconnected(induced_subgraph(graph, candidate), mode)) {
        result.status = SolveStatus::kOptimal;
        result.labels = candidate;
        result.elapsed = std::chrono::steady_clock::now() - start;
        return result;
      }
      // Next k-combination of {0..q-1} in lexicographic order.
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == q - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace mlbp::oracle
