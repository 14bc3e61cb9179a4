#include "support.hpp"

#include <algorithm>

namespace cocycles::testing {

Graph from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1)});
  return Graph::from_edges(n, edges);
}

Graph triangle() { return from_pairs(3, {{1, 2}, {2, 3}, {3, 1}}); }

Graph k4() { return from_pairs(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Graph k23() { return from_pairs(5, {{1, 3}, {3, 2}, {1, 4}, {4, 2}, {1, 5}, {5, 2}}); }

Graph two_triangles() { return from_pairs(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}}); }

Graph pentagon_two_triangles() {
  return from_pairs(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {6, 2}, {3, 7}, {7, 4}});
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

CanonicalCycle cyc(std::initializer_list<int> labels) {
  std::vector<VertexId> ids;
  for (int l : labels) ids.push_back(static_cast<VertexId>(l - 1));
  return canonicalize(ids);
}

bool induced_subgraph_is_cycle(const Graph& g, const std::vector<VertexId>& vertices) {
  const std::size_t k = vertices.size();
  if (k < 3) return false;
  std::vector<VertexId> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.vertex_count()) return false;
  // Every vertex has exactly two neighbours inside the set ...
  for (VertexId v : sorted) {
    std::size_t inside = 0;
    for (VertexId w : g.neighbors(v)) inside += std::binary_search(sorted.begin(), sorted.end(), w);
    if (inside != 2) return false;
  }
  // ... and the set is connected, so the induced subgraph is one cycle.
  std::vector<char> seen(k, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = sorted[stack.back()];
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), w);
      if (it == sorted.end() || *it != w) continue;
      const auto idx = static_cast<std::size_t>(it - sorted.begin());
      if (!seen[idx]) {
        seen[idx] = 1;
        ++reached;
        stack.push_back(idx);
      }
    }
  }
  return reached == k;
}

namespace {

bool connected_without(const Graph& g, VertexId removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  VertexId start = removed == 0 ? 1 : 0;
  if (n <= 1 || (n == 2 && removed < 2)) return true;
  seen[start] = 1;
  std::vector<VertexId> stack{start};
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (w == removed || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n - (removed < n ? 1 : 0);
}

}  // namespace

bool brute_two_connected(const Graph& g) {
  const auto none = static_cast<VertexId>(g.vertex_count());
  if (!connected_without(g, none)) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!connected_without(g, v)) return false;
  }
  return true;
}

}  // namespace cocycles::testing
