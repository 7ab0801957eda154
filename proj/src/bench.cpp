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

#include "qaoa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include "json.hpp"

#include "qaoa/encoding.hpp"
#include "qaoa/rng.hpp"

namespace qaoa::bench {

using json = nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << text;
}

} // namespace

std::vector<std::size_t> default_sizes() {
  std::vector<std::size_t> sizes = {8, 10, 12};
  for (std::size_t n = 14; n <= 25; ++n)
    sizes.push_back(n);
  return sizes;
}

std::string instance_name(std::size_t n) { return fmt::format("MC_{}", n); }

Graph suite_instance(std::size_t n, double density, std::uint64_t seed) {
  return generate_random_graph(n, density, hash64(seed, n));
}

std::vector<fs::path> cmd_generate(const GenerateOptions &opts) {
  if (opts.sizes.empty())
    throw std::invalid_argument("no instance sizes given");
  fs::create_directories(opts.out_dir);
  std::vector<fs::path> written;
  for (auto n : opts.sizes) {
    const auto path = opts.out_dir / (instance_name(n) + ".txt");
    save_graph(suite_instance(n, opts.density, opts.seed), path);
    written.push_back(path);
  }
  return written;
}

std::vector<fs::path> expand_instances(const std::vector<fs::path> &inputs) {
  std::vector<fs::path> out;
  for (const auto &input : inputs) {
    if (!fs::is_directory(input)) {
      out.push_back(input);
      continue;
    }
    std::vector<std::pair<std::size_t, fs::path>> found;
    for (const auto &entry : fs::directory_iterator(input)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".txt")
        continue;
      std::size_t n = SIZE_MAX;
      try {
        n = load_graph(entry.path()).num_nodes();
      } catch (const std::exception &) {
        // left for the caller to report
      }
      found.emplace_back(n, entry.path());
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
      return a.first != b.first ? a.first < b.first
                                : a.second.filename() < b.second.filename();
    });
    for (auto &f : found)
      out.push_back(std::move(f.second));
  }
  return out;
}

std::string record_to_json_line(const BenchRecord &r) {
  json counts = json::object();
  for (auto k : kAllGateKinds)
    counts[std::string(gate_name(k))] = r.gate_counts[k];
  json j = {
      {"instance", r.instance},
      {"n", r.n},
      {"edges", r.edges},
      {"layers", r.layers},
      {"run", r.run},
      {"seed", r.seed},
      {"strategy", std::string(strategy_name(r.strategy))},
      {"mode", std::string(mode_name(r.mode))},
      {"ar_expectation", r.ar_expectation},
      {"ar_best", r.ar_best},
      {"expected_cost", r.expected_cost},
      {"best_sampled_cost", r.best_sampled_cost},
      {"optimum", r.optimum},
      {"evaluations", r.evaluations},
      {"converged", r.converged},
      {"compiled_depth", r.compiled_depth},
      {"gate_counts", counts},
      {"best_params", r.best_params},
  };
  return j.dump();
}

BenchRecord record_from_json_line(const std::string &line) {
  const auto j = json::parse(line);
  BenchRecord r;
  r.instance = j.at("instance").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.edges = j.at("edges").get<std::size_t>();
  r.layers = j.at("layers").get<std::size_t>();
  r.run = j.at("run").get<std::size_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.strategy = parse_strategy(j.at("strategy").get<std::string>());
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.ar_expectation = j.at("ar_expectation").get<double>();
  r.ar_best = j.at("ar_best").get<double>();
  r.expected_cost = j.at("expected_cost").get<double>();
  r.best_sampled_cost = j.at("best_sampled_cost").get<double>();
  r.optimum = j.at("optimum").get<double>();
  r.evaluations = j.at("evaluations").get<std::size_t>();
  r.converged = j.at("converged").get<bool>();
  r.compiled_depth = j.at("compiled_depth").get<std::size_t>();
  for (auto k : kAllGateKinds)
    r.gate_counts.by_kind[static_cast<std::size_t>(k)] =
        j.at("gate_counts").at(std::string(gate_name(k))).get<std::size_t>();
  r.best_params = j.at("best_params").get<std::vector<double>>();
  return r;
}

std::vector<BenchRecord> load_records(const fs::path &path) {
  std::istringstream in(read_file(path));
  std::vector<BenchRecord> records;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      records.push_back(record_from_json_line(line));
  return records;
}

std::vector<SummaryCell> aggregate(const std::vector<BenchRecord> &records) {
  std::vector<std::string> order;
  std::map<std::pair<std::string, std::size_t>, std::vector<const BenchRecord *>>
      groups;
  for (const auto &r : records) {
    if (std::find(order.begin(), order.end(), r.instance) == order.end())
      order.push_back(r.instance);
    groups[{r.instance, r.layers}].push_back(&r);
  }
  std::vector<SummaryCell> cells;
  for (const auto &name : order) {
    for (const auto &[key, group] : groups) {
      if (key.first != name)
        continue;
      SummaryCell cell;
      cell.instance = name;
      cell.n = group.front()->n;
      cell.layers = key.second;
      cell.runs = group.size();
      const double count = static_cast<double>(group.size());
      for (const auto *r : group) {
        cell.ar_mean += r->ar_expectation;
        cell.ar_best_mean += r->ar_best;
        cell.depth_mean += static_cast<double>(r->compiled_depth);
      }
      cell.ar_mean /= count;
      cell.ar_best_mean /= count;
      cell.depth_mean /= count;
      double var = 0.0;
      for (const auto *r : group)
        var += (r->ar_expectation - cell.ar_mean) *
               (r->ar_expectation - cell.ar_mean);
      cell.ar_std = std::sqrt(var / count);
      cells.push_back(cell);
    }
  }
  return cells;
}

std::string format_summary_table(const std::vector<SummaryCell> &cells) {
  std::vector<std::size_t> layers;
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (const auto &c : cells) {
    if (std::find(layers.begin(), layers.end(), c.layers) == layers.end())
      layers.push_back(c.layers);
    if (std::find(rows.begin(), rows.end(), std::pair{c.instance, c.n}) ==
        rows.end())
      rows.emplace_back(c.instance, c.n);
  }
  std::sort(layers.begin(), layers.end());

  std::string out = fmt::format("{:<10} {:>4}", "instance", "n");
  for (auto p : layers)
    out += fmt::format(" | {:^15}", fmt::format("{}-layer", p));
  out += '\n';
  out += fmt::format("{:<10} {:>4}", "", "");
  for (std::size_t i = 0; i < layers.size(); ++i)
    out += fmt::format(" | {:>6}   {:>6}", "mean", "std");
  out += '\n';
  for (const auto &[name, n] : rows) {
    out += fmt::format("{:<10} {:>4}", name, n);
    for (auto p : layers) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const auto &c) {
        return c.instance == name && c.layers == p;
      });
      if (it == cells.end())
        out += fmt::format(" | {:^15}", "-");
      else
        out += fmt::format(" | {:6.4f} ± {:6.4f}", it->ar_mean, it->ar_std);
    }
    out += '\n';
  }
  return out;
}

std::string format_summary_csv(const std::vector<SummaryCell> &cells) {
  std::string out =
      "instance,n,layers,runs,ar_mean,ar_std,ar_best_mean,depth_mean\n";
  for (const auto &c : cells)
    out += fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g}\n",
                       c.instance, c.n, c.layers, c.runs, c.ar_mean, c.ar_std,
                       c.ar_best_mean, c.depth_mean);
  return out;
}

std::uint64_t run_seed(std::uint64_t seed, const std::string &instance,
                       std::size_t layers, std::size_t run) {
  return hash64(hash64(seed, fnv1a64(instance)),
                (static_cast<std::uint64_t>(layers) << 32) | run);
}

CutSolution enumerate_optimum(const Graph &g) {
  const auto n = g.num_nodes();
  if (n > 24)
    throw std::invalid_argument("plain enumeration limited to 24 nodes");
  CutSolution best;
  best.value = -1.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment bits(n);
    for (std::size_t i = 0; i < n; ++i)
      bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    const double v = cut_value(g, bits);
    if (v > best.value)
      best = {std::move(bits), v};
  }
  return best;
}

double cached_optimum(const Graph &g, const std::string &content,
                      const fs::path &cache_file, unsigned workers) {
  const auto key = fmt::format("{:016x}", fnv1a64(content));
  json cache = json::object();
  if (fs::exists(cache_file)) {
    try {
      cache = json::parse(read_file(cache_file));
    } catch (const json::exception &) {
      cache = json::object();
    }
    if (cache.is_object() && cache.contains(key)) {
      const auto &entry = cache[key];
      if (entry.value("n", std::size_t{0}) == g.num_nodes() &&
          entry.contains("value"))
        return entry["value"].get<double>();
    }
  }
  const auto sol = brute_force_optimum(g, workers);
  if (!cache.is_object())
    cache = json::object();
  cache[key] = {{"n", g.num_nodes()},
                {"value", sol.value},
                {"assignment", to_bitstring(sol.assignment)}};
  write_file(cache_file, cache.dump(2) + "\n");
  return sol.value;
}

BenchOutcome cmd_bench(const BenchOptions &opts, std::ostream &log) {
  if (opts.layers.empty())
    throw std::invalid_argument("no layer counts given");
  if (std::any_of(opts.layers.begin(), opts.layers.end(),
                  [](auto p) { return p < 1; }))
    throw std::invalid_argument("layer counts must be at least 1");
  if (opts.runs < 1)
    throw std::invalid_argument("runs must be at least 1");
  if (opts.shots < 1)
    throw std::invalid_argument("shots must be at least 1");
  const auto paths = expand_instances(opts.instances);
  if (paths.empty())
    throw std::invalid_argument("no instances given");

  fs::create_directories(opts.out);
  const auto cache_file = opts.out / "optimum_cache.json";

  struct Instance {
    std::string name;
    Graph graph;
    double optimum;
    QaoaProblem problem;
  };
  std::vector<Instance> instances;
  BenchOutcome outcome;
  for (const auto &path : paths) {
    const auto name = path.stem().string();
    const auto content = read_file(path);
    Graph g = parse_graph(content);
    const auto n = g.num_nodes();
    if (n > kMaxBruteForceNodes || n > opts.max_qubits) {
      const auto reason = fmt::format(
          "{} nodes exceeds the limit ({} for the exact optimum, {} qubits)", n,
          kMaxBruteForceNodes, opts.max_qubits);
      log << fmt::format("warning: skipping {}: {}\n", name, reason);
      outcome.skipped.push_back({name, reason});
      continue;
    }
    const double optimum =
        cached_optimum(g, content, cache_file, std::max(1U, opts.workers));
    if (!(optimum > 0.0)) {
      log << fmt::format("warning: skipping {}: optimum is 0\n", name);
      outcome.skipped.push_back({name, "optimum is 0 (no edges)"});
      continue;
    }
    auto problem = QaoaProblem::maxcut(g);
    instances.push_back({name, std::move(g), optimum, std::move(problem)});
  }

  struct Task {
    std::size_t instance;
    std::size_t layers;
    std::size_t run;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (auto p : opts.layers)
      for (std::size_t r = 0; r < opts.runs; ++r)
        tasks.push_back({i, p, r});

  const auto partial_path = opts.out / "records.jsonl.partial";
  std::ofstream partial(partial_path, std::ios::binary | std::ios::trunc);
  std::mutex io_mutex;
  std::atomic<std::size_t> next{0};
  std::size_t done = 0;
  std::vector<BenchRecord> records(tasks.size());
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      const auto t = next.fetch_add(1);
      if (t >= tasks.size())
        return;
      const auto &task = tasks[t];
      const auto &inst = instances[task.instance];
      try {
        QaoaConfig cfg;
        cfg.layers = task.layers;
        cfg.shots = opts.shots;
        cfg.max_evaluations = opts.budget;
        cfg.mode = opts.mode;
        cfg.strategy = opts.strategy;
        cfg.max_qubits = opts.max_qubits;
        cfg.seed = run_seed(opts.seed, inst.name, task.layers, task.run);

        const auto start = std::chrono::steady_clock::now();
        const auto res = run_qaoa(inst.problem, cfg, inst.optimum);
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;

        BenchRecord rec;
        rec.instance = inst.name;
        rec.n = inst.graph.num_nodes();
        rec.edges = inst.graph.num_edges();
        rec.layers = task.layers;
        rec.run = task.run;
        rec.seed = cfg.seed;
        rec.strategy = cfg.strategy;
        rec.mode = cfg.mode;
        rec.ar_expectation = res.ar_expectation;
        rec.ar_best = res.ar_best;
        rec.expected_cost = res.expected_cost;
        rec.best_sampled_cost = res.best_sampled_cost;
        rec.optimum = inst.optimum;
        rec.evaluations = res.evaluations;
        rec.converged = res.converged;
        rec.compiled_depth = res.compiled_depth;
        rec.gate_counts = res.gate_counts;
        rec.best_params = res.best_params;
        rec.wall_time = elapsed.count();

        std::lock_guard lock(io_mutex);
        partial << record_to_json_line(rec) << '\n' << std::flush;
        ++done;
        log << fmt::format("[{}/{}] {} p={} run={} ar={:.4f} evals={} "
                           "({:.2f}s)\n",
                           done, tasks.size(), rec.instance, rec.layers,
                           rec.run, rec.ar_expectation, rec.evaluations,
                           rec.wall_time);
        records[t] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(io_mutex);
        if (!failure)
          failure = std::current_exception();
        next = tasks.size();
        return;
      }
    }
  };

  const unsigned workers =
      std::max(1U, std::min<unsigned>(opts.workers,
                                      static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(worker);
  }
  partial.close();
  if (failure)
    std::rethrow_exception(failure);

  std::string lines;
  std::string timings = "instance,layers,run,wall_time_s\n";
  for (const auto &r : records) {
    lines += record_to_json_line(r);
    lines += '\n';
    timings += fmt::format("{},{},{},{:.6f}\n", r.instance, r.layers, r.run,
                           r.wall_time);
  }
  write_file(opts.out / "records.jsonl", lines);
  write_file(opts.out / "timings.csv", timings);
  fs::remove(partial_path);

  outcome.records = std::move(records);
  outcome.summary = aggregate(outcome.records);
  auto table = format_summary_table(outcome.summary);
  for (const auto &s : outcome.skipped)
    table += fmt::format("# skipped {}: {}\n", s.instance, s.reason);
  write_file(opts.out / "summary.txt", table);
  write_file(opts.out / "summary.csv", format_summary_csv(outcome.summary));
  return outcome;
}

DepthRow depth_row(const std::string &name, const Graph &g,
                   std::size_t layers) {
  const auto problem = QaoaProblem::maxcut(g);
  const std::vector<double> params(2 * layers, 0.5);
  const auto naive =
      decompose(problem.ansatz(params, layers, Strategy::naive));
  const auto scheduled =
      decompose(problem.ansatz(params, layers, Strategy::scheduled));
  DepthRow row;
  row.instance = name;
  row.n = g.num_nodes();
  row.edges = g.num_edges();
  row.layers = layers;
  row.naive_depth = depth(naive);
  row.scheduled_depth = depth(scheduled);
  row.naive_cx = gate_counts(naive)[GateKind::CX];
  row.scheduled_cx = gate_counts(scheduled)[GateKind::CX];
  return row;
}

std::vector<DepthRow> cmd_depth(const DepthOptions &opts) {
  if (opts.layers.empty())
    throw std::invalid_argument("no layer counts given");
  const auto paths = expand_instances(opts.instances);
  if (paths.empty())
    throw std::invalid_argument("no instances given");
  std::vector<DepthRow> rows;
  for (const auto &path : paths) {
    const auto g = load_graph(path);
    for (auto p : opts.layers) {
      if (p < 1)
        throw std::invalid_argument("layer counts must be at least 1");
      rows.push_back(depth_row(path.stem().string(), g, p));
    }
  }
  if (!opts.out.empty()) {
    fs::create_directories(opts.out);
    write_file(opts.out / "depth.txt", format_depth_table(rows));
    write_file(opts.out / "depth.csv", format_depth_csv(rows));
  }
  return rows;
}

std::string format_depth_table(const std::vector<DepthRow> &rows) {
  std::string out = fmt::format("{:<10} {:>4} {:>6} {:>6} {:>8} {:>10}\n",
                                "instance", "n", "edges", "layers", "naive",
                                "scheduled");
  for (const auto &r : rows)
    out += fmt::format("{:<10} {:>4} {:>6} {:>6} {:>8} {:>10}\n", r.instance,
                       r.n, r.edges, r.layers, r.naive_depth,
                       r.scheduled_depth);
  return out;
}

std::string format_depth_csv(const std::vector<DepthRow> &rows) {
  std::string out = "instance,n,edges,layers,naive_depth,scheduled_depth,"
                    "naive_cx,scheduled_cx\n";
  for (const auto &r : rows)
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.instance, r.n, r.edges,
                       r.layers, r.naive_depth, r.scheduled_depth, r.naive_cx,
                       r.scheduled_cx);
  return out;
}

double least_squares_slope(const std::vector<double> &x,
                           const std::vector<double> &y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope needs two or more paired points");
  const double count = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0.0)
    throw std::invalid_argument("slope undefined for constant x");
  return sxy / sxx;
}

bool VerifyReport::ok() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const Check &c) { return c.passed; });
}

VerifyReport cmd_verify(const fs::path &instance) {
  VerifyReport report;
  report.instance = instance.string();
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  std::optional<Graph> loaded;
  try {
    loaded = load_graph(instance);
    add("parse", true,
        fmt::format("{} nodes, {} edges", loaded->num_nodes(),
                    loaded->num_edges()));
  } catch (const std::exception &e) {
    add("parse", false, e.what());
    return report;
  }
  const Graph &g = *loaded;
  const auto n = g.num_nodes();
  const double scale = std::max(1.0, g.total_weight());
  const double tol = 1e-12 * scale;

  const auto qubo = maxcut_to_qubo(g);
  const auto ising = qubo_to_ising(qubo);
  {
    std::vector<std::uint64_t> masks;
    if (n <= 16) {
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        masks.push_back(m);
    } else {
      Rng rng(0x76657269ULL);
      for (int k = 0; k < 4096; ++k)
        masks.push_back(rng.next_u64() & ((std::uint64_t{1} << n) - 1));
    }
    double worst_qubo = 0.0, worst_ising = 0.0;
    for (auto m : masks) {
      Assignment bits(n);
      for (std::size_t i = 0; i < n; ++i)
        bits[i] = static_cast<std::uint8_t>((m >> i) & 1U);
      const double cut = cut_value(g, bits);
      const double f = qubo.evaluate(bits);
      worst_qubo = std::max(worst_qubo, std::abs(f + cut));
      worst_ising = std::max(worst_ising, std::abs(ising_energy(ising, bits) - f));
    }
    add("qubo-equals-negative-cut", worst_qubo <= tol,
        fmt::format("{} assignments, max error {:.3g}", masks.size(),
                    worst_qubo));
    add("ising-equals-qubo", worst_ising <= tol,
        fmt::format("{} assignments, max error {:.3g}", masks.size(),
                    worst_ising));
  }

  const bool unweighted = std::all_of(g.edges().begin(), g.edges().end(),
                                      [](const Edge &e) { return e.w == 1.0; });
  if (unweighted) {
    const bool zero = std::all_of(ising.fields().begin(), ising.fields().end(),
                                  [](double h) { return h == 0.0; });
    add("unweighted-fields-zero", zero, zero ? "h = 0" : "nonzero field");
  }

  const auto optimum = brute_force_optimum(g);
  {
    const double recomputed = cut_value(g, optimum.assignment);
    const bool ok = optimum.value >= 0.0 &&
                    optimum.value <= g.total_weight() + tol &&
                    std::abs(recomputed - optimum.value) <= tol &&
                    optimum.assignment[0] == 0;
    add("optimum-bounds", ok,
        fmt::format("optimum {} of total weight {}", optimum.value,
                    g.total_weight()));
  }
  if (n <= 12) {
    const auto reference = enumerate_optimum(g);
    add("optimum-gray-vs-enumeration",
        std::abs(reference.value - optimum.value) <= tol,
        fmt::format("gray {} vs enumeration {}", optimum.value,
                    reference.value));
  }

  if (n <= 20) {
    const auto problem = QaoaProblem(ising);
    QaoaConfig cfg;
    cfg.mode = ObjectiveMode::exact_expectation;
    cfg.layers = 1;
    const std::vector<double> zeros(2, 0.0);
    const double value = objective(problem, cfg, zeros);
    const double expected = -g.total_weight() / 2.0;
    add("zero-angle-expectation", std::abs(value - expected) <= tol,
        fmt::format("objective {} vs -W/2 = {}", value, expected));
  }
  return report;
}

std::string format_verify_report(const VerifyReport &r) {
  std::string out = fmt::format("verify {}\n", r.instance);
  for (const auto &c : r.checks)
    out += fmt::format("  {} {}: {}\n", c.passed ? "PASS" : "FAIL", c.name,
                       c.detail);
  out += r.ok() ? "all checks passed\n" : "verification FAILED\n";
  return out;
}

} // namespace qaoa::bench
