#include "cocycles/generator.hpp"

#include <random>

#include "cocycles/oracle.hpp"

namespace cocycles {

namespace {

struct Builder {
  std::size_t n = 0;
  std::vector<Edge> edges;

  VertexId add_vertex() { return static_cast<VertexId>(n++); }

  // Path from a to b through `interior` fresh vertices.
  void add_path(VertexId a, VertexId b, std::size_t interior) {
    VertexId prev = a;
    for (std::size_t i = 0; i < interior; ++i) {
      const VertexId v = add_vertex();
      edges.push_back({prev, v});
      prev = v;
    }
    edges.push_back({prev, b});
  }

  Graph build() const { return Graph::from_edges(n, edges); }
};

std::size_t draw_len(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void seed_cycle(Builder& b, std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = draw_len(rng, min_len, max_len);
  const VertexId first = b.add_vertex();
  const VertexId second = b.add_vertex();
  b.edges.push_back({first, second});
  b.add_path(second, first, len - 2);
}

void attach(Builder& b, std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  const std::size_t len = draw_len(rng, min_len, max_len);
  const Edge e = b.edges[std::uniform_int_distribution<std::size_t>(0, b.edges.size() - 1)(rng)];
  b.add_path(e.u, e.v, len - 2);
}

Builder build_co(const GenParams& p, std::mt19937_64& rng) {
  Builder b;
  seed_cycle(b, rng, p.min_len, p.max_len);
  for (std::size_t i = 0; i < p.attachments; ++i) attach(b, rng, p.min_len, p.max_len);
  return b;
}

}  // namespace

void validate(const GenParams& p) {
  if (p.min_len < 3) throw std::invalid_argument("min_len must be at least 3");
  if (p.max_len < p.min_len) throw std::invalid_argument("max_len must not be below min_len");
}

Graph gen_co_graph(const GenParams& p) {
  validate(p);
  std::mt19937_64 rng(p.seed);
  return build_co(p, rng).build();
}

Graph gen_co_graph_sized(std::size_t target_vertices, std::size_t min_len, std::size_t max_len,
                         std::uint64_t seed) {
  GenParams p{0, min_len, max_len, seed, true};
  validate(p);
  std::mt19937_64 rng(seed);
  Builder b;
  seed_cycle(b, rng, min_len, max_len);
  while (b.n < target_vertices) attach(b, rng, min_len, max_len);
  return b.build();
}

Graph gen_non_co_graph(const GenParams& p, std::size_t max_retries) {
  validate(p);
  std::mt19937_64 rng(p.seed);
  const std::size_t max_interior = std::max<std::size_t>(1, p.max_len - 2);

  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    Builder b = build_co(p, rng);
    const Graph base = b.build();

    std::vector<Edge> candidates;
    for (VertexId u = 0; u < base.vertex_count(); ++u) {
      for (VertexId v = u + 1; v < base.vertex_count(); ++v) {
        if (!base.has_edge(u, v)) candidates.push_back({u, v});
      }
    }
    if (candidates.empty()) continue;
    const Edge pair = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
    for (int k = 0; k < 2; ++k) {
      b.add_path(pair.u, pair.v, std::uniform_int_distribution<std::size_t>(1, max_interior)(rng));
    }
    Graph g = b.build();
    if (!oracle::decompose_is_co(g)) return g;
  }
  throw GeneratorError("could not produce a verified non-CO graph in " + std::to_string(max_retries) +
                       " attempts");
}

std::vector<std::string> generator_metadata(const GenParams& p) {
  return {
      std::string("generator ") + (p.want_co ? "co" : "non-co") + " prng " + kGeneratorPrng,
      "seed " + std::to_string(p.seed) + " attachments " + std::to_string(p.attachments) + " min_len " +
          std::to_string(p.min_len) + " max_len " + std::to_string(p.max_len),
  };
}

}  // namespace cocycles
