// Serial vs OpenMP timings for the two parallel kernels:
// per-component reduction and the exhaustive orientation sweep.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <vector>

#include <omp.h>

#include "cocycles/generator.hpp"
#include "cocycles/oracle.hpp"
#include "cocycles/reducer.hpp"

using namespace cocycles;

namespace {

template <class F>
double best_ms(int repeat, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

// Disjoint union of `parts` generated CO graphs, joined by bridges.
Graph many_blocks(std::size_t parts, std::size_t attachments) {
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const Graph g = gen_co_graph(GenParams{attachments, 3, 8, 1000 + i, true});
    for (const Edge& e : g.edges()) {
      edges.push_back({static_cast<VertexId>(e.u + offset), static_cast<VertexId>(e.v + offset)});
    }
    if (i) edges.push_back({static_cast<VertexId>(offset - 1), static_cast<VertexId>(offset)});
    offset += g.vertex_count();
  }
  return Graph::from_edges(offset, edges);
}

Graph k2k(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back({0, static_cast<VertexId>(2 + i)});
    edges.push_back({1, static_cast<VertexId>(2 + i)});
  }
  return Graph::from_edges(k + 2, edges);
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int repeat = 3;
  std::printf("kernel,threads,ms,result\n");

  const Graph blocks = many_blocks(64, 2000);
  std::size_t serial_cycles = 0, parallel_cycles = 0;
  const double serial = best_ms(repeat, [&] { serial_cycles = enumerate_chordless_cycles(blocks).cycles.size(); });
  const double parallel = best_ms(repeat, [&] {
    EnumerateOptions opts;
    opts.threads = threads;
    parallel_cycles = enumerate_chordless_cycles(blocks, opts).cycles.size();
  });
  std::printf("reduce_components,1,%.3f,%zu\n", serial, serial_cycles);
  std::printf("reduce_components,%d,%.3f,%zu\n", threads, parallel, parallel_cycles);

  const Graph theta = k2k(11);
  bool serial_co = true, parallel_co = true;
  const double sweep_serial = best_ms(1, [&] { serial_co = oracle::brute_is_co(theta, 24, 1); });
  const double sweep_parallel = best_ms(1, [&] { parallel_co = oracle::brute_is_co(theta, 24, threads); });
  std::printf("orientation_sweep,1,%.3f,%d\n", sweep_serial, serial_co);
  std::printf("orientation_sweep,%d,%.3f,%d\n", threads, sweep_parallel, parallel_co);

  return serial_cycles == parallel_cycles && serial_co == parallel_co ? 0 : 1;
}
