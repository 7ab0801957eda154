// Copyright 2026 The qaoa-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/engine.hpp"
#include "qaoa/graph.hpp"

namespace qaoa::bench {

namespace fs = std::filesystem;

/// 8, 10, 12, 14, 15, ..., 25: the fifteen benchmark sizes.
std::vector<std::size_t> default_sizes();
std::string instance_name(std::size_t n); // "MC_<n>"

/// Instance for size n in a suite: generate_random_graph(n, density,
/// hash64(seed, n)).
Graph suite_instance(std::size_t n, double density, std::uint64_t seed);

struct GenerateOptions {
  std::vector<std::size_t> sizes = default_sizes();
  double density = 0.5;
  std::uint64_t seed = 1;
  fs::path out_dir = "instances";
};

/// Writes <out_dir>/MC_<n>.txt per size; returns the paths in size order.
std::vector<fs::path> cmd_generate(const GenerateOptions &opts);

/// Expands directories (their *.txt files) and orders instances by node
/// count, then file name. Plain files keep their given order.
std::vector<fs::path> expand_instances(const std::vector<fs::path> &inputs);

struct BenchRecord {
  std::string instance;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t layers = 0;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::scheduled;
  ObjectiveMode mode = ObjectiveMode::sampled_expectation;
  double ar_expectation = 0.0;
  double ar_best = 0.0;
  double expected_cost = 0.0;
  double best_sampled_cost = 0.0;
  double optimum = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::size_t compiled_depth = 0;
  GateCounts gate_counts;
  std::vector<double> best_params;
  double wall_time = 0.0; // seconds; kept out of the records file
};

/// One JSON object per line. wall_time is omitted so that identical runs
/// give byte-identical files.
std::string record_to_json_line(const BenchRecord &r);
BenchRecord record_from_json_line(const std::string &line);
std::vector<BenchRecord> load_records(const fs::path &path);

/// Mean and population standard deviation of ar_expectation over runs.
struct SummaryCell {
  std::string instance;
  std::size_t n = 0;
  std::size_t layers = 0;
  std::size_t runs = 0;
  double ar_mean = 0.0;
  double ar_std = 0.0;
  double ar_best_mean = 0.0;
  double depth_mean = 0.0;
};

/// Cells in first-appearance order of instances, then ascending layers.
std::vector<SummaryCell> aggregate(const std::vector<BenchRecord> &records);

/// Instances as rows, one "mean ± std" column per layer count.
std::string format_summary_table(const std::vector<SummaryCell> &cells);
std::string format_summary_csv(const std::vector<SummaryCell> &cells);

/// Per-run seed: hash64(hash64(seed, fnv1a64(instance)), layers << 32 | run).
std::uint64_t run_seed(std::uint64_t seed, const std::string &instance,
                       std::size_t layers, std::size_t run);

struct BenchOptions {
  std::vector<fs::path> instances; // files or directories (expanded)
  std::vector<std::size_t> layers = {1, 3, 5};
  std::size_t runs = 5;
  std::uint64_t shots = 10000;
  std::size_t budget = 5000; // objective evaluations per run
  Strategy strategy = Strategy::scheduled;
  ObjectiveMode mode = ObjectiveMode::sampled_expectation;
  std::uint64_t seed = 1;
  fs::path out = "results";
  unsigned workers = 1;
  std::size_t max_qubits = kDefaultMaxQubits;
};

struct Skipped {
  std::string instance;
  std::string reason;
};

struct BenchOutcome {
  std::vector<BenchRecord> records; // sorted by instance order, layers, run
  std::vector<SummaryCell> summary;
  std::vector<Skipped> skipped;
};

/// Runs every (instance, layers, run) and writes into opts.out:
///   records.jsonl        one record per run
///   summary.txt / .csv   aggregate table
///   timings.csv          wall time per run
///   optimum_cache.json   brute-force optima keyed by file content hash
/// Progress and warnings go to `log`.
BenchOutcome cmd_bench(const BenchOptions &opts, std::ostream &log);

/// Exact Max-Cut value, cached in `cache_file` under the FNV-1a hash of
/// the instance text.
double cached_optimum(const Graph &g, const std::string &content,
                      const fs::path &cache_file, unsigned workers);

struct DepthRow {
  std::string instance;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t layers = 0;
  std::size_t naive_depth = 0;
  std::size_t scheduled_depth = 0;
  std::size_t naive_cx = 0;
  std::size_t scheduled_cx = 0;
};

struct DepthOptions {
  std::vector<fs::path> instances; // files or directories (expanded)
  std::vector<std::size_t> layers = {1, 3, 5};
  fs::path out; // empty: do not write files
};

/// Compiled depth of the ansatz for both strategies (depth does not depend
/// on the angles, so a fixed placeholder is used).
DepthRow depth_row(const std::string &name, const Graph &g,
                   std::size_t layers);
std::vector<DepthRow> cmd_depth(const DepthOptions &opts);
std::string format_depth_table(const std::vector<DepthRow> &rows);
std::string format_depth_csv(const std::vector<DepthRow> &rows);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(const std::vector<double> &x,
                           const std::vector<double> &y);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string instance;
  std::vector<Check> checks;
  bool ok() const;
};

/// Cross-checks one instance against independent routes: parsing, QUBO and
/// Ising energies against the cut on every assignment (sampled above 16
/// nodes), Gray-code against plain enumeration (n <= 12), optimum bounds,
/// and the zero-angle QAOA expectation (n <= 20).
VerifyReport cmd_verify(const fs::path &instance);
std::string format_verify_report(const VerifyReport &r);

/// Plain 2^n enumeration; reference for the Gray-code search.
CutSolution enumerate_optimum(const Graph &g);

} // namespace qaoa::bench
