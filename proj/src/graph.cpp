#include "cocycles/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace cocycles {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("label table size does not match vertex count");
  }
  Graph g;
  g.adjacency_.resize(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  g.edge_count_ = edges.size();
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<std::uint64_t> to_uint(std::string_view tok) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

struct RawEdge {
  Label u;
  Label v;
  std::size_t line;
};

}  // namespace

Graph parse_graph(std::istream& in) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tok = split_ws(line);
    if (tok.empty() || tok[0].front() == 'c') continue;

    if (tok[0] == "p") {
      if (header) throw ParseError(line_no, "duplicate header");
      if (!raw.empty()) throw ParseError(line_no, "header after edge lines");
      if (tok.size() != 4 || tok[1] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      auto n = to_uint(tok[2]);
      auto m = to_uint(tok[3]);
      if (!n || !m) throw ParseError(line_no, "malformed header counts");
      if (*n > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex count too large");
      header = {*n, *m};
      continue;
    }

    std::span<const std::string_view> ends;
    if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      ends = std::span(tok).subspan(1);
    } else {
      if (header) throw ParseError(line_no, "bare edge line not allowed after a header");
      if (tok.size() != 2) throw ParseError(line_no, "malformed line");
      ends = std::span(tok);
    }
    auto u = to_uint(ends[0]);
    auto v = to_uint(ends[1]);
    if (!u || !v) throw ParseError(line_no, "vertex labels must be positive integers");
    if (*u == 0 || *v == 0) throw ParseError(line_no, "vertex labels are 1-based");
    if (*u == *v) throw ParseError(line_no, "self-loop forbidden");
    if (header && (*u > header->first || *v > header->first)) {
      throw ParseError(line_no, "vertex label exceeds header vertex count");
    }
    raw.push_back({*u, *v, line_no});
  }

  if (header && raw.size() != header->second) {
    throw ParseError(line_no, "header declares " + std::to_string(header->second) +
                                  " edges but " + std::to_string(raw.size()) + " were given");
  }

  std::size_t n = 0;
  std::vector<Label> labels;
  std::map<Label, VertexId> id_of;
  if (header) {
    n = header->first;
  } else {
    for (const auto& e : raw) {
      id_of.emplace(e.u, 0);
      id_of.emplace(e.v, 0);
    }
    VertexId next = 0;
    for (auto& [label, id] : id_of) {
      id = next++;
      labels.push_back(label);
    }
    n = labels.size();
    bool identity = true;
    for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i] == i + 1;
    if (identity) labels.clear();
  }

  auto to_id = [&](Label l) -> VertexId {
    return header ? static_cast<VertexId>(l - 1) : id_of.at(l);
  };

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::map<std::pair<VertexId, VertexId>, std::size_t> seen;
  for (const auto& e : raw) {
    VertexId a = to_id(e.u);
    VertexId b = to_id(e.v);
    auto key = std::minmax(a, b);
    auto [it, inserted] = seen.emplace(std::pair{key.first, key.second}, e.line);
    if (!inserted) {
      throw ParseError(e.line, "duplicate edge (first given on line " + std::to_string(it->second) + ")");
    }
    edges.push_back({a, b});
  }
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << "c " << c << '\n';
  bool dense_labels = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v) dense_labels = dense_labels && g.label(v) == Label{v} + 1;
  if (dense_labels) out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

CanonicalCycle canonicalize(std::span<const VertexId> cycle) {
  CanonicalCycle out;
  const std::size_t k = cycle.size();
  if (k == 0) return out;
  const std::size_t start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const VertexId next = cycle[(start + 1) % k];
  const VertexId prev = cycle[(start + k - 1) % k];
  const bool forward = next <= prev;
  out.vertices.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.vertices.push_back(forward ? cycle[(start + i) % k] : cycle[(start + k - i) % k]);
  }
  return out;
}

bool is_chordless_cycle(const Graph& g, std::span<const VertexId> cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  for (VertexId v : cycle) {
    if (v >= g.vertex_count()) return false;
  }
  std::vector<VertexId> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

}  // namespace cocycles
