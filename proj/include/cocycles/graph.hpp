#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cocycles {

/// Dense internal vertex index in [0, n).
using VertexId = std::uint32_t;

/// External (1-based, user-facing) vertex label.
using Label = std::uint64_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Vertex sequence <v1, ..., vk> with the first vertex not repeated at the end.
using Cycle = std::vector<VertexId>;

/// Rotation/reflection normal form of a cycle: minimum vertex first, the
/// smaller of its two cycle-neighbours second.
struct CanonicalCycle {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  friend auto operator<=>(const CanonicalCycle&, const CanonicalCycle&) = default;
};

using CycleSet = std::vector<CanonicalCycle>;

/**
 * Immutable simple undirected graph.
 *
 * Adjacency lists are sorted, so membership tests are O(log d). An optional
 * label table maps internal ids back to the labels used in the input file;
 * when absent, vertex v is labelled v + 1.
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n vertices. Throws std::invalid_argument on self-loops,
  /// duplicate edges, out-of-range endpoints or a label table of the wrong size.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::vector<Label> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Label label(VertexId v) const { return labels_.empty() ? Label{v} + 1 : labels_[v]; }
  bool has_labels() const { return !labels_.empty(); }

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Label> labels_;
  std::size_t edge_count_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Reads the edge-list format:
 *
 *   c <comment>
 *   p edge <n> <m>      (optional header, at most once, before any edge)
 *   e <u> <v>           (1-based labels)
 *   <u> <v>             (bare form, only without a header)
 *
 * With a header, label l maps to internal id l - 1 and labels must not exceed
 * n. Without a header, the distinct labels are numbered in increasing order,
 * which keeps canonical cycle forms identical in both id spaces.
 */
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

/// Writes the edge-list format using external labels. A "p edge" header is
/// emitted when the labels are exactly 1..n; comment lines go first.
void write_graph(std::ostream& out, const Graph& g,
                 std::span<const std::string> comments = {});

CanonicalCycle canonicalize(std::span<const VertexId> cycle);

/// True iff `cycle` is a cycle of g (length >= 3, distinct vertices,
/// consecutive pairs adjacent) and no edge of g joins two non-consecutive
/// cycle vertices. Malformed sequences yield false.
bool is_chordless_cycle(const Graph& g, std::span<const VertexId> cycle);

}  // namespace cocycles
