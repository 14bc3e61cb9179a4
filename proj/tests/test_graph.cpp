#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "cocycles/graph.hpp"
#include "support.hpp"

using namespace cocycles;
using namespace cocycles::testing;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse_graph reads the header form") {
  const Graph g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.label(2) == 3);
}

TEST_CASE("parse_graph accepts comments, CRLF and bare lines") {
  const Graph g = parse_graph("c a comment\r\n1 2\r\n\r\n2 3\r\n  3   1  \r\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_graph keeps sparse labels in order") {
  const Graph g = parse_graph("10 30\n30 20\n20 10\n");
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.label(0) == 10);
  CHECK(g.label(1) == 20);
  CHECK(g.label(2) == 30);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse_graph keeps isolated vertices declared by the header") {
  const Graph g = parse_graph("p edge 5 1\ne 1 2\n");
  CHECK(g.vertex_count() == 5);
  CHECK(g.degree(4) == 0);
}

TEST_CASE("pentagon with two triangles has 7 vertices and 9 edges") {
  const std::string text =
      "c pentagon 1-2-3-4-5 with triangles on (1,2) and (3,4)\n"
      "e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 1 6\ne 6 2\ne 3 7\ne 7 4\n";
  const Graph g = parse_graph(text);
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 9);
  CHECK(g.edges() == pentagon_two_triangles().edges());
}

TEST_CASE("parse_graph reports errors with line numbers") {
  CHECK(parse_error_line("e 1 1\n") == 1);
  CHECK(parse_error_line("e 1 2\ne 2 1\n") == 2);
  CHECK(parse_error_line("c x\ne 1\n") == 2);
  CHECK(parse_error_line("e 1 x\n") == 1);
  CHECK(parse_error_line("e 0 1\n") == 1);
  CHECK(parse_error_line("p edge 2 1\ne 1 3\n") == 2);
  CHECK(parse_error_line("p edge 3 2\ne 1 2\n") == 2);
  CHECK(parse_error_line("p edge 3 1\n1 2\n") == 2);
  CHECK(parse_error_line("e 1 2\np edge 2 1\n") == 2);
  CHECK(parse_error_line("p edge 3 0\np edge 3 0\n") == 2);
  CHECK(parse_error_line("p graph 3 0\n") == 1);
  CHECK(parse_error_line("x y z w\n") == 1);
}

TEST_CASE("self-loop message names the problem") {
  try {
    parse_graph("e 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
}

TEST_CASE("Graph invariants hold for random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(12, 0.3, rng);
    std::size_t half = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(v);
      half += nb.size();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        CHECK(nb[i] != v);
        if (i) CHECK(nb[i - 1] < nb[i]);
        CHECK(g.has_edge(nb[i], v));
      }
    }
    CHECK(half == 2 * g.edge_count());
  }
}

TEST_CASE("write_graph then parse_graph reproduces the edge set") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(9, 0.4, rng);
    std::ostringstream out;
    write_graph(out, g, std::vector<std::string>{"round trip"});
    const Graph back = parse_graph(out.str());
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
  // Sparse labels survive without a header.
  const Graph sparse = parse_graph("10 30\n30 20\n");
  std::ostringstream out;
  write_graph(out, sparse);
  const Graph back = parse_graph(out.str());
  CHECK(back.edges() == sparse.edges());
  CHECK(back.label(2) == 30);
}

TEST_CASE("canonicalize examples") {
  auto ids = [](std::initializer_list<VertexId> v) { return std::vector<VertexId>(v); };
  CHECK(canonicalize(ids({3, 1, 2})).vertices == ids({1, 2, 3}));
  CHECK(canonicalize(ids({1, 3, 2})).vertices == ids({1, 2, 3}));
  CHECK(canonicalize(ids({4, 5, 1, 2, 3})).vertices == ids({1, 2, 3, 4, 5}));
  CHECK(canonicalize(ids({2, 9, 4, 7})).vertices == ids({2, 7, 4, 9}));
}

TEST_CASE("canonicalize is invariant under rotation and reversal") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 3 + rng() % 8;
    std::vector<VertexId> c(k);
    std::iota(c.begin(), c.end(), VertexId{0});
    for (auto& v : c) v = static_cast<VertexId>(v * 7 + rng() % 5);
    std::shuffle(c.begin(), c.end(), rng);
    const CanonicalCycle ref = canonicalize(c);
    CHECK(canonicalize(ref.vertices) == ref);
    CHECK(ref.vertices[0] == *std::min_element(c.begin(), c.end()));
    CHECK(ref.vertices[1] < ref.vertices.back());
    std::vector<VertexId> rev(c.rbegin(), c.rend());
    CHECK(canonicalize(rev) == ref);
    for (std::size_t r = 0; r < k; ++r) {
      std::vector<VertexId> rot = c;
      std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(r), rot.end());
      CHECK(canonicalize(rot) == ref);
    }
  }
}

TEST_CASE("is_chordless_cycle examples") {
  const Graph k = k4();
  CHECK(is_chordless_cycle(k, std::vector<VertexId>{0, 1, 2}));
  CHECK_FALSE(is_chordless_cycle(k, std::vector<VertexId>{0, 1, 2, 3}));
  const Graph p = pentagon_two_triangles();
  CHECK(is_chordless_cycle(p, std::vector<VertexId>{0, 1, 2, 3, 4}));
  CHECK(is_chordless_cycle(p, std::vector<VertexId>{0, 5, 1}));
  // 1-6-2-3-4-5 has the chord (1,2).
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 5, 1, 2, 3, 4}));
}

TEST_CASE("is_chordless_cycle rejects malformed sequences") {
  const Graph p = pentagon_two_triangles();
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{}));
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 1}));
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 1, 0}));
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 1, 99}));
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 1, 2}));  // (3,1) missing
  CHECK_FALSE(is_chordless_cycle(p, std::vector<VertexId>{0, 2, 1, 5}));
}

TEST_CASE("is_chordless_cycle agrees with the induced-subgraph definition") {
  std::mt19937_64 rng(21);
  int positives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = random_graph(8, 0.45, rng);
    // Random closed walks of distinct vertices.
    std::vector<VertexId> seq;
    VertexId v = static_cast<VertexId>(rng() % 8);
    seq.push_back(v);
    const std::size_t want = 3 + rng() % 5;
    while (seq.size() < want) {
      auto nb = g.neighbors(seq.back());
      if (nb.empty()) break;
      seq.push_back(nb[rng() % nb.size()]);
    }
    const bool closes = seq.size() >= 3 && g.has_edge(seq.front(), seq.back());
    bool distinct = true;
    {
      auto s = seq;
      std::sort(s.begin(), s.end());
      distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
    }
    const bool expected = closes && distinct && induced_subgraph_is_cycle(g, seq);
    CHECK(is_chordless_cycle(g, seq) == expected);
    positives += expected;
  }
  CHECK(positives > 50);
}
