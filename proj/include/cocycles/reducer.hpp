#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <string_view>
#include <variant>
#include <vector>

#include "cocycles/biconnected.hpp"
#include "cocycles/graph.hpp"

namespace cocycles {

/// m <= 2n - 3, the edge bound every cyclically orientable graph satisfies.
/// Graphs on fewer than two vertices have no edges and pass trivially.
bool check_edge_bound(std::size_t n, std::size_t m);

/// A vertex of the reduction. Original vertices keep their component id and a
/// singleton key; contracted vertices stand for a path of original vertices.
struct ReducedVertex {
  bool live = true;
  bool contracted = false;
  std::uint32_t degree = 0;
  /// Original component ids this vertex represents, ordered from end_a to end_b.
  std::vector<VertexId> key;
  /// Current neighbours of a contracted vertex. end_a sits on key.front()'s side.
  VertexId end_a = 0;
  VertexId end_b = 0;
};

/// The whole residual component is a single cycle, listed in traversal order.
struct ClosedChain {
  std::vector<VertexId> path;
};

/// A maximal run of degree-2 vertices between two anchors, ordered x to y.
struct OpenChain {
  VertexId x;
  std::vector<VertexId> path;
  VertexId y;
};

using ChainResult = std::variant<ClosedChain, OpenChain>;

enum class Terminal { Closure, SingleEdge, Residue };

struct ReduceOptions {
  /// When set, the initial queue order and the direction each walk explores
  /// first are shuffled with this seed. The result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  /// Check every emitted cycle against the component graph and throw
  /// std::logic_error on a violation.
  bool verify_emissions = false;
};

/**
 * Mutable reduction state for one biconnected component.
 *
 * Ear removal deletes a degree-2 chain whose anchors are adjacent and emits the
 * chordless cycle it closes. Contraction replaces a chain between nonadjacent
 * anchors with one degree-2 vertex whose key remembers the chain. When nothing
 * but a cycle remains it is emitted whole.
 *
 * Adjacency lists only grow (contracted vertices are appended); an entry is a
 * current edge iff both endpoints are live.
 */
class ReducerState {
 public:
  explicit ReducerState(const Graph& component, ReduceOptions options = {});

  /// Next queued vertex that is still live, original and of degree 2.
  std::optional<VertexId> pop();

  /// Precondition: u is live with degree 2.
  ChainResult walk_chain(VertexId u);

  /// Precondition: chain.x and chain.y are adjacent. Returns the emitted cycle.
  Cycle apply_ear_removal(const OpenChain& chain);
  /// Precondition: chain.x and chain.y are not adjacent. Returns w.
  VertexId apply_contraction(const OpenChain& chain);
  Cycle apply_closure(const ClosedChain& chain);

  /// Original vertices of v when entered from neighbour `from`.
  std::vector<VertexId> expand(VertexId v, VertexId from) const;
  /// Original vertices of x, path..., y in order.
  std::vector<VertexId> expand(const OpenChain& chain, bool with_anchors) const;
  std::vector<VertexId> expand(const ClosedChain& chain) const;

  bool has_edge(VertexId a, VertexId b) const;
  const ReducedVertex& vertex(VertexId v) const { return vertices_[v]; }
  std::size_t vertex_slots() const { return vertices_.size(); }
  std::size_t live_vertices() const { return n_rem_; }
  std::size_t live_edges() const { return m_rem_; }
  std::size_t pops() const { return pops_; }

  /// Emitted cycles, canonical, in component ids.
  const CycleSet& emitted() const { return emitted_; }
  std::size_t emitted_length() const { return emitted_length_; }

  Terminal terminal() const;

  /// Recounts live vertices/edges from scratch and compares with the
  /// running counters. Throws std::logic_error on mismatch.
  void audit() const;

 private:
  std::pair<VertexId, VertexId> live_pair(VertexId v) const;
  VertexId other_neighbor(VertexId v, VertexId prev) const;
  void enqueue(VertexId v);
  void kill(VertexId v);
  Cycle emit(std::vector<VertexId> cycle);

  const Graph* graph_;
  ReduceOptions options_;
  std::vector<ReducedVertex> vertices_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::deque<VertexId> queue_;
  std::size_t n_rem_ = 0;
  std::size_t m_rem_ = 0;
  std::size_t pops_ = 0;
  CycleSet emitted_;
  std::size_t emitted_length_ = 0;
  std::mt19937_64 rng_;
};

struct ReduceResult {
  bool success = false;
  Terminal terminal = Terminal::Residue;
  CycleSet cycles;
  std::size_t residual_vertices = 0;
  std::size_t residual_edges = 0;
  std::size_t output_length = 0;
  std::size_t pops = 0;
};

/// Runs the reduction to completion on a two-connected component that is not
/// a single edge. Success iff the residue is empty or a single edge.
ReduceResult reduce_component(const Graph& component, ReduceOptions options = {});

enum class NotCoReason { EdgeBoundGlobal, EdgeBoundComponent, NoDegreeTwoVertex, IrreducibleResidue };

std::string_view to_string(NotCoReason reason);

struct ComponentSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  bool single_edge = false;
  std::size_t cycles = 0;
  std::size_t output_length = 0;
  Terminal terminal = Terminal::Residue;
};

struct Verdict {
  bool co = false;
  NotCoReason reason = NotCoReason::IrreducibleResidue;  // meaningful when !co
  std::optional<std::size_t> component;                 // failing component, if any
  CycleSet cycles;                                      // parent ids, sorted
  std::vector<ComponentSummary> components;
};

struct EnumerateOptions {
  ReduceOptions reduce;
  /// Components are reduced concurrently when > 1. Output does not depend on it.
  int threads = 1;
};

/// Decides whether g is cyclically orientable and, if so, lists every
/// chordless cycle once in canonical form.
Verdict enumerate_chordless_cycles(const Graph& g, const EnumerateOptions& options = {});

}  // namespace cocycles
