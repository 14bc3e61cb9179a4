#pragma once

#include <chrono>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cocycles/graph.hpp"
#include "cocycles/reducer.hpp"

namespace cocycles::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kCo = 0, kNotCo = 1, kInputError = 2, kOracleDisagreement = 3 };

struct RunReport {
  Verdict verdict;
  std::size_t n = 0;
  std::size_t m = 0;
  double duration_ms = 0.0;
};

RunReport run_enumeration(const Graph& g, int threads);

/// "CO" or "NOT_CO <reason>".
std::string verdict_line(const Verdict& v);

/// Canonical cycles in external labels, sorted lexicographically.
std::vector<std::vector<Label>> labelled_cycles(const Graph& g, const CycleSet& cycles);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t cycles = 0;
  double duration_ms = 0.0;
};

/// One generated CO graph per size; best wall time of `repeat` runs.
std::vector<BenchRow> run_bench(std::span<const std::size_t> sizes, std::uint64_t seed, int threads,
                                int repeat);

/// Entry point behind the `cocycles` executable:
///   check | enum | gen | oracle | bench
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cocycles::cli
