#pragma once

#include <vector>

#include "cocycles/graph.hpp"

namespace cocycles {

/// One biconnected component copied out of its parent graph.
///
/// Component ids are assigned in increasing parent-id order, so the id map is
/// monotone and canonical cycle forms carry over unchanged.
struct Component {
  Graph subgraph;
  std::vector<VertexId> to_parent;
  bool is_single_edge = false;
};

/// Splits g into biconnected components with one iterative lowpoint DFS.
/// Every edge lands in exactly one component; isolated vertices in none.
/// Components are sorted by their smallest edge (in parent ids).
std::vector<Component> biconnected_components(const Graph& g);

}  // namespace cocycles
