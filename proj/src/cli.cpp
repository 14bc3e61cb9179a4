#include "cocycles/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cocycles/generator.hpp"
#include "cocycles/oracle.hpp"

namespace cocycles::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct InputError {
  std::string message;
};

Graph load(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw InputError{path + ": " + e.what()};
  } catch (const std::exception& e) {
    throw InputError{e.what()};
  }
}

void print_cycles(std::ostream& out, const std::vector<std::vector<Label>>& cycles) {
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << '\n';
  }
}

int exit_for(const Verdict& v) { return v.co ? kCo : kNotCo; }

int cmd_check(const std::string& path, int threads, std::ostream& out) {
  const Graph g = load(path);
  const RunReport report = run_enumeration(g, threads);
  out << verdict_line(report.verdict) << '\n';
  return exit_for(report.verdict);
}

int cmd_enum(const std::string& path, bool json, int threads, std::ostream& out) {
  const Graph g = load(path);
  const RunReport report = run_enumeration(g, threads);
  const Verdict& v = report.verdict;
  const auto cycles = labelled_cycles(g, v.cycles);
  if (json) {
    nlohmann::ordered_json doc;
    doc["co"] = v.co;
    if (!v.co) doc["reason"] = std::string(to_string(v.reason));
    doc["n"] = report.n;
    doc["m"] = report.m;
    doc["cycles"] = cycles;
    auto comps = nlohmann::ordered_json::array();
    for (const ComponentSummary& s : v.components) {
      comps.push_back({{"n", s.n}, {"m", s.m}, {"single_edge", s.single_edge}, {"cycles", s.cycles}});
    }
    doc["components"] = std::move(comps);
    doc["duration_ms"] = report.duration_ms;
    out << doc.dump() << '\n';
  } else {
    out << verdict_line(v) << '\n';
    print_cycles(out, cycles);
  }
  return exit_for(v);
}

int cmd_gen(const GenParams& p, const std::string& output, std::ostream& out) {
  validate(p);
  const Graph g = p.want_co ? gen_co_graph(p) : gen_non_co_graph(p);
  const auto meta = generator_metadata(p);
  if (output.empty() || output == "-") {
    write_graph(out, g, meta);
  } else {
    std::ofstream file(output);
    if (!file) throw InputError{"cannot write " + output};
    write_graph(file, g, meta);
  }
  return 0;
}

int cmd_oracle(const std::string& path, std::size_t max_vertices, std::size_t max_edges, int threads,
               std::ostream& out, std::ostream& err) {
  const Graph g = load(path);
  if (g.vertex_count() > max_vertices) {
    throw InputError{"oracle out of range: " + std::to_string(g.vertex_count()) + " vertices (cap " +
                     std::to_string(max_vertices) + ")"};
  }
  const CycleSet brute = oracle::brute_chordless_cycles(g);
  const bool decomposed = oracle::decompose_is_co(g);
  std::optional<bool> oriented;
  if (g.edge_count() <= max_edges) oriented = oracle::brute_is_co(g, max_edges, threads);
  const RunReport report = run_enumeration(g, threads);

  out << "chordless_cycles " << brute.size() << '\n';
  print_cycles(out, labelled_cycles(g, brute));
  out << "decompose_is_co " << (decomposed ? "true" : "false") << '\n';
  out << "brute_is_co " << (oriented ? (*oriented ? "true" : "false") : "skipped") << '\n';
  out << "reducer " << verdict_line(report.verdict) << '\n';

  std::vector<std::string> problems;
  if (oriented && *oriented != decomposed) problems.push_back("orientation oracle disagrees with decomposition");
  if (report.verdict.co != decomposed) problems.push_back("reducer verdict disagrees with decomposition");
  if (report.verdict.co && report.verdict.cycles != brute) problems.push_back("reducer cycle set differs from brute force");
  for (const auto& p : problems) err << "error: " << p << '\n';
  out << (problems.empty() ? "agreement ok" : "agreement FAILED") << '\n';
  return problems.empty() ? 0 : kOracleDisagreement;
}

int cmd_bench(const std::vector<std::size_t>& sizes, std::uint64_t seed, int threads, int repeat,
              std::ostream& out, std::ostream& err) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError{"--sizes must be ascending"};
  const auto rows = run_bench(sizes, seed, threads, repeat);
  out << "n,m,cycles,duration_ms\n";
  std::vector<double> xs, ys;
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.cycles << ',' << r.duration_ms << '\n';
    xs.push_back(static_cast<double>(r.n));
    ys.push_back(std::max(r.duration_ms, 1e-6));
  }
  if (rows.size() >= 2) err << "loglog_slope " << loglog_slope(xs, ys) << '\n';
  return 0;
}

}  // namespace

RunReport run_enumeration(const Graph& g, int threads) {
  RunReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  EnumerateOptions opts;
  opts.threads = threads;
  const auto start = Clock::now();
  r.verdict = enumerate_chordless_cycles(g, opts);
  r.duration_ms = elapsed_ms(start);
  return r;
}

std::string verdict_line(const Verdict& v) {
  return v.co ? std::string("CO") : "NOT_CO " + std::string(to_string(v.reason));
}

std::vector<std::vector<Label>> labelled_cycles(const Graph& g, const CycleSet& cycles) {
  std::vector<std::vector<Label>> out;
  out.reserve(cycles.size());
  for (const CanonicalCycle& c : cycles) {
    std::vector<Label> row;
    row.reserve(c.size());
    for (VertexId v : c.vertices) row.push_back(g.label(v));
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t k = std::min(x.size(), y.size());
  if (k < 2) return 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double kd = static_cast<double>(k);
  return (kd * sxy - sx * sy) / (kd * sxx - sx * sx);
}

std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, int threads,
                                int repeat) {
  std::vector<BenchRow> rows;
  for (std::size_t target : sizes) {
    const Graph g = gen_co_graph_sized(target, 3, 8, seed);
    BenchRow row;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    row.duration_ms = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::max(1, repeat); ++i) {
      const RunReport report = run_enumeration(g, threads);
      row.cycles = report.verdict.cycles.size();
      row.duration_ms = std::min(row.duration_ms, report.duration_ms);
    }
    rows.push_back(row);
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic-orientability check and chordless cycle enumeration"};
  app.require_subcommand(1);
  int threads = 1;

  std::string input;
  bool json = false;
  auto* check = app.add_subcommand("check", "Decide whether the graph is cyclically orientable");
  check->add_option("input", input, "Edge-list file")->required();
  check->add_option("--threads", threads, "Worker threads for component reduction")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enum", "List every chordless cycle of a CO graph");
  enumerate->add_option("input", input, "Edge-list file")->required();
  enumerate->add_flag("--json", json, "Emit a JSON report");
  enumerate->add_option("--threads", threads, "Worker threads for component reduction")->check(CLI::PositiveNumber);

  GenParams params;
  params.max_len = 6;
  bool non_co = false;
  std::string output;
  auto* gen = app.add_subcommand("gen", "Generate a CO (or non-CO) test graph");
  gen->add_option("--attachments", params.attachments, "Cycles glued onto the seed cycle");
  gen->add_option("--min-len", params.min_len, "Minimum cycle length")->capture_default_str();
  gen->add_option("--max-len", params.max_len, "Maximum cycle length")->capture_default_str();
  gen->add_option("--seed", params.seed, "PRNG seed")->capture_default_str();
  gen->add_flag("--non-co", non_co, "Produce a verified non-CO graph");
  gen->add_option("-o,--output", output, "Output path (default stdout)");

  std::size_t max_vertices = 25;
  std::size_t max_edges = 24;
  auto* orc = app.add_subcommand("oracle", "Cross-check the reducer against brute-force oracles");
  orc->add_option("input", input, "Edge-list file")->required();
  orc->add_option("--max-vertices", max_vertices, "Cap for induced-cycle enumeration")->capture_default_str();
  orc->add_option("--max-edges", max_edges, "Cap for the orientation sweep")->capture_default_str();
  orc->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::size_t> sizes{1000, 2000, 4000, 8000, 16000, 32000, 64000};
  std::uint64_t seed = 1;
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "Time enumeration on generated CO graphs (CSV)");
  bench->add_option("--sizes", sizes, "Target vertex counts, ascending")->delimiter(',');
  bench->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  bench->add_option("--repeat", repeat, "Runs per size; best time is reported")->capture_default_str();
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(input, threads, out);
    if (*enumerate) return cmd_enum(input, json, threads, out);
    if (*gen) {
      params.want_co = !non_co;
      return cmd_gen(params, output, out);
    }
    if (*orc) return cmd_oracle(input, max_vertices, max_edges, threads, out, err);
    if (*bench) return cmd_bench(sizes, seed, threads, repeat, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const GeneratorError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cocycles::cli
