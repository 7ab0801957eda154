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
#include <map>
#include <utility>
#include <vector>

#include "qaoa/graph.hpp"

namespace qaoa {

// Sign and spin conventions used throughout:
//   * every cost is minimized; for Max-Cut the cost is -cut,
//   * bit b maps to spin z = 1 - 2b (bit 0 <-> z = +1, bit 1 <-> z = -1),
//   * constant offsets are kept exactly and never dropped.

struct QuboTerm {
  std::size_t i = 0; // i <= j; i == j is a linear term
  std::size_t j = 0;
  double coeff = 0.0;
};

/// f(x) = sum_{i<=j} coeff_ij x_i x_j + offset over x in {0,1}^n, minimized.
/// Terms keep first-insertion order; repeated keys accumulate.
class Qubo {
public:
  explicit Qubo(std::size_t n) : n_(n) {}

  void add(std::size_t i, std::size_t j, double coeff);
  void add_offset(double c) { offset_ += c; }

  std::size_t num_variables() const { return n_; }
  const std::vector<QuboTerm> &terms() const { return terms_; }
  double coeff(std::size_t i, std::size_t j) const;
  double offset() const { return offset_; }

  double evaluate(const Assignment &x) const;

private:
  std::size_t n_;
  std::vector<QuboTerm> terms_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  double offset_ = 0.0;
};

struct Coupling {
  std::size_t i = 0; // i < j
  std::size_t j = 0;
  double value = 0.0;
};

/// E(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + offset, z in {-1,+1}^n.
/// Couplings keep first-insertion order, which is the order the naive
/// compilation strategy emits them in.
class IsingModel {
public:
  explicit IsingModel(std::size_t n) : h_(n, 0.0) {}

  void add_field(std::size_t i, double value);
  void add_coupling(std::size_t i, std::size_t j, double value);
  void add_offset(double c) { offset_ += c; }

  std::size_t num_spins() const { return h_.size(); }
  const std::vector<double> &fields() const { return h_; }
  const std::vector<Coupling> &couplings() const { return couplings_; }
  double coupling(std::size_t i, std::size_t j) const;
  double offset() const { return offset_; }

private:
  std::vector<double> h_;
  std::vector<Coupling> couplings_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
  double offset_ = 0.0;
};

/// Per edge (u, v, w): x_u and x_v get -w, x_u x_v gets +2w. f(x) = -cut(x).
Qubo maxcut_to_qubo(const Graph &g);

/// Substitutes x_i = (1 - z_i) / 2; energies agree on every assignment.
IsingModel qubo_to_ising(const Qubo &q);

double ising_energy(const IsingModel &m, const Assignment &bits);

/// E for every basis index (bit i of the index = bit of spin i), filled in
/// Gray-code order so each entry costs O(degree).
std::vector<double> energy_table(const IsingModel &m);

} // namespace qaoa
