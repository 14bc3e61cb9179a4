#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cocycles/graph.hpp"

// Brute-force ground truth. Nothing here shares code with the reducer or the
// biconnected decomposition; only graph_core is used.

namespace cocycles::oracle {

class OutOfRange : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every induced cycle, each once, canonical, sorted. DFS over induced paths
/// rooted at the smallest cycle vertex.
CycleSet brute_chordless_cycles(const Graph& g);

/// Direction bit per edge of g.edges(); bit set means u -> v for u < v.
using Orientation = std::uint64_t;

/// True iff some orientation makes every chordless cycle a directed cycle.
/// Exhaustive over 2^(m-1) orientations (reversing all edges preserves the
/// property, so the first edge is fixed). Throws OutOfRange when m > max_edges.
/// With threads > 1 the sweep is split by bit prefix.
bool brute_is_co(const Graph& g, std::size_t max_edges = 24, int threads = 1);

/// Same question answered through the constructive characterization: every
/// block is an edge, a cycle, or peels down to one by repeatedly deleting a
/// degree-2 chain whose two anchors are adjacent.
bool decompose_is_co(const Graph& g);

/// Blocks of g as edge lists (parent ids, u < v), found by brute force: two
/// edges at a common vertex a share a block iff their far ends stay connected
/// in g - a.
std::vector<std::vector<Edge>> brute_blocks(const Graph& g);

}  // namespace cocycles::oracle
