#include "cocycles/biconnected.hpp"

#include <algorithm>

namespace cocycles {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

Component materialize(std::vector<Edge> edges) {
  std::vector<VertexId> verts;
  verts.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  auto local = [&](VertexId p) {
    return static_cast<VertexId>(std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };
  for (Edge& e : edges) e = {local(e.u), local(e.v)};

  Component c;
  c.is_single_edge = edges.size() == 1;
  c.subgraph = Graph::from_edges(verts.size(), edges);
  c.to_parent = std::move(verts);
  return c;
}

struct Frame {
  VertexId v;
  VertexId parent;
  std::size_t next;
};

}  // namespace

std::vector<Component> biconnected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> groups;
  std::vector<Frame> stack;
  std::uint32_t clock = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != 0 || g.degree(root) == 0) continue;
    disc[root] = low[root] = ++clock;
    stack.push_back({root, kNone, 0});

    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      auto nbrs = g.neighbors(v);
      if (f.next < nbrs.size()) {
        const VertexId w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == 0) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = ++clock;
          stack.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }

      // v is finished; fold into its parent.
      const VertexId parent = f.parent;
      stack.pop_back();
      if (parent == kNone) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        std::vector<Edge> group;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          group.push_back(e);
          if (e.u == parent && e.v == v) break;
        }
        groups.push_back(std::move(group));
      }
    }
  }

  std::vector<Component> out;
  out.reserve(groups.size());
  for (auto& grp : groups) {
    for (Edge& e : grp) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(grp.begin(), grp.end());
  }
  std::sort(groups.begin(), groups.end(),
            [](const std::vector<Edge>& a, const std::vector<Edge>& b) { return a.front() < b.front(); });
  for (auto& grp : groups) out.push_back(materialize(std::move(grp)));
  return out;
}

}  // namespace cocycles
