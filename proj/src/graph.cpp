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

#include "qaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include <fmt/format.h>

#include "qaoa/rng.hpp"

namespace qaoa {

std::string to_bitstring(const Assignment &bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i])
      s[i] = '1';
  return s;
}

Graph::Graph(std::size_t num_nodes, std::vector<Edge> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ < 1)
    throw std::invalid_argument("graph needs at least one node");
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto &e : edges_) {
    if (e.u >= e.v)
      throw std::invalid_argument(
          fmt::format("edge ({}, {}) is not canonical (need u < v)", e.u, e.v));
    if (e.v >= num_nodes_)
      throw std::invalid_argument(fmt::format(
          "edge ({}, {}) out of range for {} nodes", e.u, e.v, num_nodes_));
    if (!std::isfinite(e.w) || e.w < 0.0)
      throw std::invalid_argument(
          fmt::format("edge ({}, {}) has invalid weight {}", e.u, e.v, e.w));
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument(
          fmt::format("duplicate edge ({}, {})", e.u, e.v));
  }
}

double Graph::total_weight() const {
  double total = 0.0;
  for (const auto &e : edges_)
    total += e.w;
  return total;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(num_nodes_, 0);
  for (const auto &e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

ParseError::ParseError(std::size_t line, const std::string &what)
    : std::runtime_error(fmt::format("line {}: {}", line, what)), line_(line) {}

Graph generate_random_graph(std::size_t n, double density,
                            std::uint64_t seed) {
  if (n < 2)
    throw std::invalid_argument("random graph needs at least 2 nodes");
  if (!(density >= 0.0 && density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng.uniform() < density)
        edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges));
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <class T>
T parse_number(std::string_view token, std::size_t line, const char *what) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, fmt::format("invalid {} '{}'", what, token));
  return value;
}

} // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::vector<Edge> edges;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size())
        break;
      continue;
    }

    if (!have_header) {
      if (tokens.size() != 2)
        throw ParseError(line_no, "header must be '<num_nodes> <num_edges>'");
      num_nodes = parse_number<std::size_t>(tokens[0], line_no, "node count");
      num_edges = parse_number<std::size_t>(tokens[1], line_no, "edge count");
      if (num_nodes < 1)
        throw ParseError(line_no, "node count must be positive");
      have_header = true;
    } else {
      if (tokens.size() != 2 && tokens.size() != 3)
        throw ParseError(line_no, "edge line must be 'u v' or 'u v w'");
      auto u = parse_number<std::uint32_t>(tokens[0], line_no, "node index");
      auto v = parse_number<std::uint32_t>(tokens[1], line_no, "node index");
      double w = 1.0;
      if (tokens.size() == 3)
        w = parse_number<double>(tokens[2], line_no, "weight");
      if (u >= num_nodes || v >= num_nodes)
        throw ParseError(line_no, fmt::format("node index out of range ({} "
                                              "nodes)",
                                              num_nodes));
      if (u == v)
        throw ParseError(line_no, fmt::format("self-loop on node {}", u));
      if (!std::isfinite(w) || w < 0.0)
        throw ParseError(line_no, "weight must be finite and non-negative");
      if (u > v)
        std::swap(u, v);
      if (!seen.emplace(u, v).second)
        throw ParseError(line_no, fmt::format("duplicate edge ({}, {})", u, v));
      if (edges.size() == num_edges)
        throw ParseError(line_no,
                         fmt::format("more edges than declared ({})", num_edges));
      edges.push_back({u, v, w});
    }
    if (end == text.size())
      break;
  }
  if (!have_header)
    throw ParseError(line_no, "missing header");
  if (edges.size() != num_edges)
    throw ParseError(line_no, fmt::format("declared {} edges, found {}",
                                          num_edges, edges.size()));
  return Graph(num_nodes, std::move(edges));
}

std::string format_graph(const Graph &g) {
  std::string out = fmt::format("{} {}\n", g.num_nodes(), g.num_edges());
  for (const auto &e : g.edges()) {
    if (e.w == 1.0)
      out += fmt::format("{} {}\n", e.u, e.v);
    else
      out += fmt::format("{} {} {:.17g}\n", e.u, e.v, e.w);
  }
  return out;
}

Graph load_graph(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open instance file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph(const Graph &g, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error("cannot write instance file " + path.string());
  out << format_graph(g);
}

double cut_value(const Graph &g, const Assignment &bits) {
  if (bits.size() != g.num_nodes())
    throw std::invalid_argument(fmt::format(
        "assignment has {} bits, graph has {} nodes", bits.size(),
        g.num_nodes()));
  double cut = 0.0;
  for (const auto &e : g.edges())
    if (bits[e.u] != bits[e.v])
      cut += e.w;
  return cut;
}

namespace {

struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> neighbors;
  std::vector<double> weights;
};

Adjacency build_adjacency(const Graph &g) {
  const auto n = g.num_nodes();
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const auto &e : g.edges()) {
    ++adj.offsets[e.u + 1];
    ++adj.offsets[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i)
    adj.offsets[i + 1] += adj.offsets[i];
  adj.neighbors.resize(adj.offsets[n]);
  adj.weights.resize(adj.offsets[n]);
  auto fill = adj.offsets;
  for (const auto &e : g.edges()) {
    adj.neighbors[fill[e.u]] = e.v;
    adj.weights[fill[e.u]++] = e.w;
    adj.neighbors[fill[e.v]] = e.u;
    adj.weights[fill[e.v]++] = e.w;
  }
  return adj;
}

struct Best {
  double value = -1.0;
  std::uint64_t mask = 0;
};

// Strictly better, or tied within tolerance with a smaller mask.
bool improves(double value, std::uint64_t mask, const Best &best, double tol) {
  if (value > best.value + tol)
    return true;
  return value >= best.value - tol && mask < best.mask;
}

// Scans Gray-code ranks [first, last). The mask of rank k is (k ^ (k >> 1))
// shifted left by one, so node 0 stays on side 0.
Best scan_range(const Graph &g, const Adjacency &adj, std::uint64_t first,
                std::uint64_t last, double tol) {
  const auto n = g.num_nodes();
  std::vector<std::uint8_t> side(n, 0);
  const std::uint64_t start = (first ^ (first >> 1)) << 1;
  for (std::size_t i = 0; i < n; ++i)
    side[i] = static_cast<std::uint8_t>((start >> i) & 1U);
  double value = cut_value(g, side);
  std::uint64_t mask = start;

  Best best{value, mask};
  for (std::uint64_t k = first + 1; k < last; ++k) {
    const auto node = static_cast<std::size_t>(std::countr_zero(k)) + 1;
    const auto s = side[node];
    double delta = 0.0;
    for (auto a = adj.offsets[node]; a < adj.offsets[node + 1]; ++a)
      delta += side[adj.neighbors[a]] == s ? adj.weights[a] : -adj.weights[a];
    side[node] = s ^ 1U;
    value += delta;
    mask ^= std::uint64_t{1} << node;
    if (improves(value, mask, best, tol))
      best = {value, mask};
  }
  return best;
}

} // namespace

CutSolution brute_force_optimum(const Graph &g, unsigned workers) {
  const auto n = g.num_nodes();
  if (n > kMaxBruteForceNodes)
    throw std::invalid_argument(
        fmt::format("brute-force optimum limited to {} nodes, graph has {}",
                    kMaxBruteForceNodes, n));
  const Adjacency adj = build_adjacency(g);
  const std::uint64_t ranks = std::uint64_t{1} << (n - 1);
  const double tol = 1e-9 * std::max(1.0, g.total_weight());

  workers = std::max(1U, workers);
  const std::uint64_t chunks = std::min<std::uint64_t>(workers, ranks);
  std::vector<Best> partial(chunks);
  auto run_chunk = [&](std::uint64_t c) {
    const std::uint64_t first = ranks * c / chunks;
    const std::uint64_t last = ranks * (c + 1) / chunks;
    partial[c] = scan_range(g, adj, first, last, tol);
  };
  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t c = 0; c < chunks; ++c)
      pool.emplace_back(run_chunk, c);
  }

  Best best = partial.front();
  for (std::size_t c = 1; c < partial.size(); ++c)
    if (improves(partial[c].value, partial[c].mask, best, tol))
      best = partial[c];

  CutSolution sol;
  sol.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    sol.assignment[i] = static_cast<std::uint8_t>((best.mask >> i) & 1U);
  sol.value = cut_value(g, sol.assignment);
  return sol;
}

} // namespace qaoa
