#include "cocycles/reducer.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace cocycles {

bool check_edge_bound(std::size_t n, std::size_t m) {
  if (n < 2) return m == 0;
  return m <= 2 * n - 3;
}

ReducerState::ReducerState(const Graph& component, ReduceOptions options)
    : graph_(&component), options_(options), rng_(options.shuffle_seed.value_or(0)) {
  const std::size_t n = component.vertex_count();
  vertices_.resize(n);
  adjacency_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto nbrs = component.neighbors(v);
    adjacency_[v].assign(nbrs.begin(), nbrs.end());
    vertices_[v].degree = static_cast<std::uint32_t>(nbrs.size());
    vertices_[v].key = {v};
    if (nbrs.size() == 2) queue_.push_back(v);
  }
  n_rem_ = n;
  m_rem_ = component.edge_count();
  if (options_.shuffle_seed) std::shuffle(queue_.begin(), queue_.end(), rng_);
}

std::optional<VertexId> ReducerState::pop() {
  while (!queue_.empty()) {
    const VertexId v = queue_.front();
    queue_.pop_front();
    ++pops_;
    const ReducedVertex& rv = vertices_[v];
    // Degrees only fall while a vertex waits, and walks may have consumed it.
    if (rv.live && !rv.contracted && rv.degree == 2) return v;
  }
  return std::nullopt;
}

std::pair<VertexId, VertexId> ReducerState::live_pair(VertexId v) const {
  const ReducedVertex& rv = vertices_[v];
  if (rv.contracted) return {rv.end_a, rv.end_b};
  VertexId found[2] = {0, 0};
  int count = 0;
  for (VertexId w : adjacency_[v]) {
    if (!vertices_[w].live) continue;
    found[count++] = w;
    if (count == 2) break;
  }
  if (count != 2) throw std::logic_error("degree-2 vertex without two live neighbours");
  return {found[0], found[1]};
}

VertexId ReducerState::other_neighbor(VertexId v, VertexId prev) const {
  auto [a, b] = live_pair(v);
  return a == prev ? b : a;
}

ChainResult ReducerState::walk_chain(VertexId u) {
  auto [a, b] = live_pair(u);
  if (options_.shuffle_seed && (rng_() & 1)) std::swap(a, b);

  std::vector<VertexId> forward;
  VertexId prev = u;
  VertexId cur = a;
  while (cur != u && vertices_[cur].degree == 2) {
    forward.push_back(cur);
    const VertexId next = other_neighbor(cur, prev);
    prev = cur;
    cur = next;
  }
  if (cur == u) {
    ClosedChain closed;
    closed.path.reserve(forward.size() + 1);
    closed.path.push_back(u);
    closed.path.insert(closed.path.end(), forward.begin(), forward.end());
    return closed;
  }
  const VertexId x = cur;

  std::vector<VertexId> backward;
  prev = u;
  cur = b;
  while (vertices_[cur].degree == 2) {
    backward.push_back(cur);
    const VertexId next = other_neighbor(cur, prev);
    prev = cur;
    cur = next;
  }
  const VertexId y = cur;
  if (x == y) throw std::logic_error("chain closes on a single anchor; component is not two-connected");

  OpenChain open{x, {}, y};
  open.path.reserve(forward.size() + backward.size() + 1);
  open.path.assign(forward.rbegin(), forward.rend());
  open.path.push_back(u);
  open.path.insert(open.path.end(), backward.begin(), backward.end());
  return open;
}

std::vector<VertexId> ReducerState::expand(VertexId v, VertexId from) const {
  const ReducedVertex& rv = vertices_[v];
  if (!rv.contracted || from == rv.end_a) return rv.key;
  return {rv.key.rbegin(), rv.key.rend()};
}

std::vector<VertexId> ReducerState::expand(const OpenChain& chain, bool with_anchors) const {
  std::vector<VertexId> out;
  if (with_anchors) out.push_back(chain.x);
  VertexId prev = chain.x;
  for (VertexId p : chain.path) {
    auto part = expand(p, prev);
    out.insert(out.end(), part.begin(), part.end());
    prev = p;
  }
  if (with_anchors) out.push_back(chain.y);
  return out;
}

std::vector<VertexId> ReducerState::expand(const ClosedChain& chain) const {
  std::vector<VertexId> out;
  if (chain.path.empty()) return out;
  VertexId prev = chain.path.back();
  for (VertexId p : chain.path) {
    auto part = expand(p, prev);
    out.insert(out.end(), part.begin(), part.end());
    prev = p;
  }
  return out;
}

bool ReducerState::has_edge(VertexId a, VertexId b) const {
  if (a >= vertices_.size() || b >= vertices_.size()) return false;
  if (!vertices_[a].live || !vertices_[b].live) return false;
  const std::size_t n0 = graph_->vertex_count();
  if (a >= n0) return vertices_[a].end_a == b || vertices_[a].end_b == b;
  if (b >= n0) return vertices_[b].end_a == a || vertices_[b].end_b == a;
  // Edges between live original vertices are never deleted.
  return graph_->has_edge(a, b);
}

void ReducerState::enqueue(VertexId v) { queue_.push_back(v); }

void ReducerState::kill(VertexId v) {
  vertices_[v].live = false;
  --n_rem_;
}

Cycle ReducerState::emit(std::vector<VertexId> cycle) {
  if (options_.verify_emissions && !is_chordless_cycle(*graph_, cycle)) {
    throw std::logic_error("reduction emitted a cycle that is not chordless");
  }
  emitted_length_ += cycle.size();
  emitted_.push_back(canonicalize(cycle));
  return cycle;
}

Cycle ReducerState::apply_ear_removal(const OpenChain& chain) {
  auto cycle = expand(chain, true);
  for (VertexId p : chain.path) kill(p);
  m_rem_ -= chain.path.size() + 1;
  for (VertexId anchor : {chain.x, chain.y}) {
    if (--vertices_[anchor].degree == 2) enqueue(anchor);
  }
  return emit(std::move(cycle));
}

VertexId ReducerState::apply_contraction(const OpenChain& chain) {
  if (chain.path.size() == 1) {
    // Same vertex, same edges: only its role changes.
    const VertexId v = chain.path.front();
    ReducedVertex& rv = vertices_[v];
    rv.key = expand(v, chain.x);
    rv.contracted = true;
    rv.end_a = chain.x;
    rv.end_b = chain.y;
    return v;
  }

  ReducedVertex w;
  w.contracted = true;
  w.degree = 2;
  w.key = expand(chain, false);
  w.end_a = chain.x;
  w.end_b = chain.y;
  const auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(std::move(w));
  adjacency_.push_back({chain.x, chain.y});
  adjacency_[chain.x].push_back(id);
  adjacency_[chain.y].push_back(id);

  for (VertexId p : chain.path) kill(p);
  ++n_rem_;
  m_rem_ -= chain.path.size() - 1;
  return id;
}

Cycle ReducerState::apply_closure(const ClosedChain& chain) {
  auto cycle = expand(chain);
  for (VertexId p : chain.path) kill(p);
  m_rem_ -= chain.path.size();
  return emit(std::move(cycle));
}

Terminal ReducerState::terminal() const {
  if (n_rem_ == 0) return Terminal::Closure;
  if (n_rem_ == 2 && m_rem_ == 1) return Terminal::SingleEdge;
  return Terminal::Residue;
}

void ReducerState::audit() const {
  std::size_t live = 0;
  std::size_t half_edges = 0;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!vertices_[v].live) continue;
    ++live;
    std::size_t deg = 0;
    for (VertexId w : adjacency_[v]) deg += vertices_[w].live ? 1 : 0;
    if (deg != vertices_[v].degree) throw std::logic_error("degree counter out of sync");
    if (vertices_[v].contracted && deg != 2) throw std::logic_error("contracted vertex without degree 2");
    half_edges += deg;
  }
  if (live != n_rem_) throw std::logic_error("live vertex count out of sync");
  if (half_edges != 2 * m_rem_) throw std::logic_error("live edge count out of sync");
}

ReduceResult reduce_component(const Graph& component, ReduceOptions options) {
  ReducerState state(component, options);
  while (auto u = state.pop()) {
    ChainResult chain = state.walk_chain(*u);
    if (auto* closed = std::get_if<ClosedChain>(&chain)) {
      state.apply_closure(*closed);
      continue;
    }
    const auto& open = std::get<OpenChain>(chain);
    if (state.has_edge(open.x, open.y)) {
      state.apply_ear_removal(open);
    } else {
      state.apply_contraction(open);
    }
  }

  ReduceResult r;
  r.terminal = state.terminal();
  r.success = r.terminal != Terminal::Residue;
  r.residual_vertices = state.live_vertices();
  r.residual_edges = state.live_edges();
  r.output_length = state.emitted_length();
  r.pops = state.pops();
  if (r.success) r.cycles = state.emitted();
  return r;
}

std::string_view to_string(NotCoReason reason) {
  switch (reason) {
    case NotCoReason::EdgeBoundGlobal: return "EdgeBoundGlobal";
    case NotCoReason::EdgeBoundComponent: return "EdgeBoundComponent";
    case NotCoReason::NoDegreeTwoVertex: return "NoDegreeTwoVertex";
    case NotCoReason::IrreducibleResidue: return "IrreducibleResidue";
  }
  return "Unknown";
}

Verdict enumerate_chordless_cycles(const Graph& g, const EnumerateOptions& options) {
  Verdict verdict;
  if (!check_edge_bound(g.vertex_count(), g.edge_count())) {
    verdict.reason = NotCoReason::EdgeBoundGlobal;
    return verdict;
  }

  const std::vector<Component> comps = biconnected_components(g);
  const auto count = comps.size();
  verdict.components.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph& sub = comps[i].subgraph;
    verdict.components[i].n = sub.vertex_count();
    verdict.components[i].m = sub.edge_count();
    verdict.components[i].single_edge = comps[i].is_single_edge;
  }

  auto fail = [&](NotCoReason reason, std::size_t index) {
    verdict.reason = reason;
    verdict.component = index;
    return verdict;
  };

  for (std::size_t i = 0; i < count; ++i) {
    const Graph& sub = comps[i].subgraph;
    if (!check_edge_bound(sub.vertex_count(), sub.edge_count())) {
      return fail(NotCoReason::EdgeBoundComponent, i);
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (comps[i].is_single_edge) continue;
    const Graph& sub = comps[i].subgraph;
    bool any = false;
    for (VertexId v = 0; v < sub.vertex_count() && !any; ++v) any = sub.degree(v) == 2;
    if (!any) return fail(NotCoReason::NoDegreeTwoVertex, i);
  }

  std::vector<ReduceResult> results(count);
  std::exception_ptr error;
  const auto signed_count = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(options.threads) if (options.threads > 1)
  for (std::ptrdiff_t i = 0; i < signed_count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (comps[idx].is_single_edge) continue;
    try {
      ReduceOptions ro = options.reduce;
      if (ro.shuffle_seed) *ro.shuffle_seed += idx;
      results[idx] = reduce_component(comps[idx].subgraph, ro);
    } catch (...) {
#pragma omp critical(cocycles_reduce_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t i = 0; i < count; ++i) {
    ComponentSummary& s = verdict.components[i];
    if (comps[i].is_single_edge) {
      s.terminal = Terminal::SingleEdge;
      continue;
    }
    const ReduceResult& r = results[i];
    s.terminal = r.terminal;
    s.cycles = r.cycles.size();
    s.output_length = r.output_length;
    if (!r.success) return fail(NotCoReason::IrreducibleResidue, i);
  }

  for (std::size_t i = 0; i < count; ++i) {
    const auto& to_parent = comps[i].to_parent;
    for (const CanonicalCycle& c : results[i].cycles) {
      std::vector<VertexId> mapped;
      mapped.reserve(c.size());
      for (VertexId v : c.vertices) mapped.push_back(to_parent[v]);
      verdict.cycles.push_back(canonicalize(mapped));
    }
  }
  std::sort(verdict.cycles.begin(), verdict.cycles.end());
  verdict.co = true;
  return verdict;
}

}  // namespace cocycles
