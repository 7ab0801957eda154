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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

/// One bit per node (0 or 1). Element i is the side of node i.
using Assignment = std::vector<std::uint8_t>;

/// Renders an assignment as a bit string, character i = bit i.
std::string to_bitstring(const Assignment &bits);

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  double w = 1.0;

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Weighted undirected graph with canonical edges (u < v), no duplicates and
/// non-negative weights. Edge order is preserved as given; it is the order
/// the naive compilation strategy emits interaction gates in.
class Graph {
public:
  /// Throws std::invalid_argument if any invariant is violated.
  Graph(std::size_t num_nodes, std::vector<Edge> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  double total_weight() const;
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  std::size_t num_nodes_;
  std::vector<Edge> edges_;
};

struct CutSolution {
  Assignment assignment;
  double value = 0.0;
};

/// Thrown by load_graph / parse_graph; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Erdos-Renyi G(n, density) with unit weights. Pairs (u, v), u < v, are
/// visited in lexicographic order and each is kept iff Rng(seed).uniform() <
/// density for the next draw.
Graph generate_random_graph(std::size_t n, double density, std::uint64_t seed);

/// Instance text format: "<num_nodes> <num_edges>" then one "u v [w]" per
/// line. '#' starts a comment; blank lines are ignored.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph &g);

Graph load_graph(const std::filesystem::path &path);
void save_graph(const Graph &g, const std::filesystem::path &path);

double cut_value(const Graph &g, const Assignment &bits);

/// Enumeration limit for brute_force_optimum.
inline constexpr std::size_t kMaxBruteForceNodes = 28;

/// Exact Max-Cut by Gray-code enumeration of the 2^(n-1) assignments with node
/// 0 pinned to side 0, so the returned assignment always has bit 0 == 0.
/// Ties go to the smallest assignment read as an unsigned integer (bit i has
/// weight 2^i), independent of `workers`.
CutSolution brute_force_optimum(const Graph &g, unsigned workers = 1);

} // namespace qaoa
