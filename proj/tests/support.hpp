#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "cocycles/graph.hpp"

namespace cocycles::testing {

/// Graph from 1-based label pairs on vertices 1..n.
Graph from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs);

Graph triangle();
Graph k4();
Graph k23();
Graph two_triangles();           // shared edge (1,2), apexes 3 and 4
Graph pentagon_two_triangles();  // pentagon 1..5, triangles (1,6,2) and (3,7,4)
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Graph on n vertices whose edges are the set bits of `mask` over the
/// lexicographic list of pairs (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// G(n, p) with a fixed seed stream.
Graph random_graph(std::size_t n, double p, std::mt19937_64& rng);

/// 1-based canonical cycle, for writing expectations by hand.
CanonicalCycle cyc(std::initializer_list<int> labels);

/// Definition-level check: the subgraph induced by the cycle's vertices is
/// connected and 2-regular on exactly those vertices.
bool induced_subgraph_is_cycle(const Graph& g, const std::vector<VertexId>& vertices);

/// Removing any single vertex leaves the graph connected (brute force).
bool brute_two_connected(const Graph& g);

}  // namespace cocycles::testing
