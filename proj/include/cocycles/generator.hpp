#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cocycles/graph.hpp"

namespace cocycles {

struct GenParams {
  std::size_t attachments = 0;
  std::size_t min_len = 3;
  std::size_t max_len = 3;
  std::uint64_t seed = 1;
  bool want_co = true;
};

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Name of the PRNG behind every generator, recorded in emitted metadata.
inline constexpr const char* kGeneratorPrng = "mt19937_64";

/// Throws std::invalid_argument unless 3 <= min_len <= max_len.
void validate(const GenParams& p);

/// Cycle of random length, then `attachments` more cycles each glued onto a
/// uniformly chosen existing edge. Every attachment adds len - 2 vertices and
/// len - 1 edges.
Graph gen_co_graph(const GenParams& p);

/// Keeps attaching cycles until the graph has at least `target_vertices`
/// vertices. Used by the benchmarks to hit a size rather than a count.
Graph gen_co_graph_sized(std::size_t target_vertices, std::size_t min_len, std::size_t max_len,
                         std::uint64_t seed);

/// A CO graph plus two new internally disjoint paths between a nonadjacent
/// pair. Each candidate is checked with the decomposition oracle; throws
/// GeneratorError if none of `max_retries` candidates is verified non-CO.
Graph gen_non_co_graph(const GenParams& p, std::size_t max_retries = 64);

/// Comment lines describing how a graph was produced.
std::vector<std::string> generator_metadata(const GenParams& p);

}  // namespace cocycles
