#include "cocycles/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>

namespace cocycles::oracle {

namespace {

struct InducedPathSearch {
  const Graph& g;
  VertexId root = 0;
  std::vector<VertexId> path;
  std::vector<char> on_path;
  CycleSet out;

  explicit InducedPathSearch(const Graph& graph) : g(graph), on_path(graph.vertex_count(), 0) {}

  void extend() {
    const VertexId last = path.back();
    for (VertexId v : g.neighbors(last)) {
      if (v <= root || on_path[v]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.has_edge(path[i], v);
      if (chord) continue;
      if (g.has_edge(root, v)) {
        if (path[1] < v) {
          CanonicalCycle c;
          c.vertices = path;
          c.vertices.push_back(v);
          out.push_back(std::move(c));
        }
        continue;
      }
      path.push_back(v);
      on_path[v] = 1;
      extend();
      on_path[v] = 0;
      path.pop_back();
    }
  }
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

CycleSet brute_chordless_cycles(const Graph& g) {
  InducedPathSearch search(g);
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    search.root = r;
    for (VertexId a : g.neighbors(r)) {
      if (a <= r) continue;
      search.path = {r, a};
      search.on_path[r] = search.on_path[a] = 1;
      search.extend();
      search.on_path[r] = search.on_path[a] = 0;
    }
  }
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

bool brute_is_co(const Graph& g, std::size_t max_edges, int threads) {
  const std::size_t m = g.edge_count();
  if (m > max_edges || m > 63) throw OutOfRange("orientation oracle out of range: " + std::to_string(m) + " edges");
  const CycleSet cycles = brute_chordless_cycles(g);
  if (cycles.empty()) return true;

  const std::vector<Edge> edges = g.edges();
  auto edge_index = [&](VertexId a, VertexId b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  struct Pattern {
    Orientation mask = 0;
    Orientation forward = 0;
  };
  std::vector<Pattern> patterns;
  patterns.reserve(cycles.size());
  for (const CanonicalCycle& c : cycles) {
    Pattern p;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const VertexId a = c.vertices[i];
      const VertexId b = c.vertices[(i + 1) % c.size()];
      const Orientation bit = Orientation{1} << edge_index(a, b);
      p.mask |= bit;
      if (a < b) p.forward |= bit;
    }
    patterns.push_back(p);
  }

  auto cyclic = [&](Orientation o) {
    for (const Pattern& p : patterns) {
      const Orientation diff = (o ^ p.forward) & p.mask;
      if (diff != 0 && diff != p.mask) return false;
    }
    return true;
  };

  // Complementing every bit maps cyclic orientations to cyclic ones, so the
  // top edge can be fixed to 0.
  const Orientation total = Orientation{1} << (m - 1);
  const int prefix_bits = threads > 1 ? std::min<int>(static_cast<int>(m - 1), 6) : 0;
  const std::int64_t chunks = std::int64_t{1} << prefix_bits;
  const Orientation chunk_size = total >> prefix_bits;
  std::atomic<bool> found{false};

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
    const Orientation begin = static_cast<Orientation>(chunk) * chunk_size;
    for (Orientation o = begin; o < begin + chunk_size; ++o) {
      if ((o & 0xFFF) == 0 && found.load(std::memory_order_relaxed)) break;
      if (cyclic(o)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return found.load();
}

std::vector<std::vector<Edge>> brute_blocks(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const std::size_t n = g.vertex_count();
  auto edge_index = [&](VertexId a, VertexId b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  std::vector<std::size_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});

  std::vector<std::size_t> label(n);
  std::vector<VertexId> stack;
  for (VertexId removed = 0; removed < n; ++removed) {
    if (g.degree(removed) < 2) continue;
    // Components of g - removed.
    std::fill(label.begin(), label.end(), SIZE_MAX);
    std::size_t next_label = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (s == removed || label[s] != SIZE_MAX) continue;
      label[s] = next_label;
      stack.push_back(s);
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v)) {
          if (w == removed || label[w] != SIZE_MAX) continue;
          label[w] = next_label;
          stack.push_back(w);
        }
      }
      ++next_label;
    }
    auto nbrs = g.neighbors(removed);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (label[nbrs[i]] != label[nbrs[j]]) continue;
        const std::size_t a = find(parent, edge_index(removed, nbrs[i]));
        const std::size_t b = find(parent, edge_index(removed, nbrs[j]));
        parent[a] = b;
      }
    }
  }

  std::vector<std::vector<Edge>> blocks;
  std::vector<std::size_t> block_of(edges.size(), SIZE_MAX);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t root = find(parent, e);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(edges[e]);
  }
  return blocks;
}

namespace {

// Greedy ear peeling on one block held as adjacency sets.
bool block_peels(const std::vector<Edge>& block) {
  if (block.size() == 1) return true;
  std::vector<VertexId> verts;
  for (const Edge& e : block) {
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto local = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::set<std::size_t>> adj(verts.size());
  for (const Edge& e : block) {
    adj[local(e.u)].insert(local(e.v));
    adj[local(e.v)].insert(local(e.u));
  }
  std::vector<char> alive(verts.size(), 1);
  std::size_t alive_count = verts.size();
  std::size_t edge_count = block.size();

  auto step = [&](std::size_t from, std::size_t cur) {
    for (std::size_t w : adj[cur]) {
      if (w != from) return w;
    }
    return from;
  };

  while (true) {
    if (edge_count == 1) return true;
    if (edge_count == alive_count) {
      bool all_two = true;
      for (std::size_t v = 0; v < adj.size(); ++v) all_two = all_two && (!alive[v] || adj[v].size() == 2);
      if (all_two) return true;
    }

    bool peeled = false;
    for (std::size_t start = 0; start < adj.size() && !peeled; ++start) {
      if (!alive[start] || adj[start].size() != 2) continue;
      std::vector<std::size_t> interior{start};
      std::size_t ends[2];
      bool wrapped = false;
      for (int side = 0; side < 2 && !wrapped; ++side) {
        std::size_t prev = start;
        std::size_t cur = *std::next(adj[start].begin(), side);
        while (adj[cur].size() == 2) {
          if (cur == start) {
            wrapped = true;
            break;
          }
          interior.push_back(cur);
          const std::size_t next = step(prev, cur);
          prev = cur;
          cur = next;
        }
        ends[side] = cur;
      }
      if (wrapped || ends[0] == ends[1] || !adj[ends[0]].contains(ends[1])) continue;
      std::sort(interior.begin(), interior.end());
      interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
      for (std::size_t v : interior) {
        for (std::size_t w : adj[v]) {
          if (w != v) adj[w].erase(v);
        }
        alive[v] = 0;
      }
      edge_count -= interior.size() + 1;
      alive_count -= interior.size();
      for (std::size_t v : interior) adj[v].clear();
      peeled = true;
    }
    if (!peeled) return false;
  }
}

}  // namespace

bool decompose_is_co(const Graph& g) {
  for (const auto& block : brute_blocks(g)) {
    if (!block_peels(block)) return false;
  }
  return true;
}

}  // namespace cocycles::oracle
