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

#include "qaoa/encoding.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include <fmt/format.h>

namespace qaoa {

void Qubo::add(std::size_t i, std::size_t j, double coeff) {
  if (i > j)
    std::swap(i, j);
  if (j >= n_)
    throw std::invalid_argument(
        fmt::format("QUBO index ({}, {}) out of range for {} variables", i, j,
                    n_));
  auto [it, inserted] = index_.try_emplace({i, j}, terms_.size());
  if (inserted)
    terms_.push_back({i, j, coeff});
  else
    terms_[it->second].coeff += coeff;
}

double Qubo::coeff(std::size_t i, std::size_t j) const {
  if (i > j)
    std::swap(i, j);
  auto it = index_.find({i, j});
  return it == index_.end() ? 0.0 : terms_[it->second].coeff;
}

double Qubo::evaluate(const Assignment &x) const {
  if (x.size() != n_)
    throw std::invalid_argument("QUBO assignment length mismatch");
  double f = offset_;
  for (const auto &t : terms_)
    if (x[t.i] && x[t.j])
      f += t.coeff;
  return f;
}

void IsingModel::add_field(std::size_t i, double value) {
  if (i >= h_.size())
    throw std::invalid_argument("Ising field index out of range");
  h_[i] += value;
}

void IsingModel::add_coupling(std::size_t i, std::size_t j, double value) {
  if (i > j)
    std::swap(i, j);
  if (i == j || j >= h_.size())
    throw std::invalid_argument(
        fmt::format("invalid Ising coupling ({}, {})", i, j));
  auto [it, inserted] = index_.try_emplace({i, j}, couplings_.size());
  if (inserted)
    couplings_.push_back({i, j, value});
  else
    couplings_[it->second].value += value;
}

double IsingModel::coupling(std::size_t i, std::size_t j) const {
  if (i > j)
    std::swap(i, j);
  auto it = index_.find({i, j});
  return it == index_.end() ? 0.0 : couplings_[it->second].value;
}

Qubo maxcut_to_qubo(const Graph &g) {
  Qubo q(g.num_nodes());
  for (const auto &e : g.edges()) {
    q.add(e.u, e.u, -e.w);
    q.add(e.v, e.v, -e.w);
    q.add(e.u, e.v, 2.0 * e.w);
  }
  return q;
}

IsingModel qubo_to_ising(const Qubo &q) {
  IsingModel m(q.num_variables());
  m.add_offset(q.offset());
  for (const auto &t : q.terms()) {
    if (t.i == t.j) {
      // c x = c/2 - (c/2) z
      m.add_field(t.i, -t.coeff / 2.0);
      m.add_offset(t.coeff / 2.0);
    } else {
      // c x_i x_j = (c/4)(1 - z_i - z_j + z_i z_j)
      const double c = t.coeff / 4.0;
      m.add_offset(c);
      m.add_field(t.i, -c);
      m.add_field(t.j, -c);
      m.add_coupling(t.i, t.j, c);
    }
  }
  return m;
}

double ising_energy(const IsingModel &m, const Assignment &bits) {
  if (bits.size() != m.num_spins())
    throw std::invalid_argument(
        fmt::format("assignment has {} bits, model has {} spins", bits.size(),
                    m.num_spins()));
  auto spin = [&](std::size_t i) { return bits[i] ? -1.0 : 1.0; };
  double e = m.offset();
  for (std::size_t i = 0; i < bits.size(); ++i)
    e += m.fields()[i] * spin(i);
  for (const auto &c : m.couplings())
    e += c.value * spin(c.i) * spin(c.j);
  return e;
}

std::vector<double> energy_table(const IsingModel &m) {
  const auto n = m.num_spins();
  if (n >= 63)
    throw std::invalid_argument("energy table width too large");
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto &c : m.couplings()) {
    adj[c.i].emplace_back(c.j, c.value);
    adj[c.j].emplace_back(c.i, c.value);
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<double> table(size);
  std::vector<double> z(n, 1.0);

  double e = m.offset();
  for (std::size_t i = 0; i < n; ++i)
    e += m.fields()[i];
  for (const auto &c : m.couplings())
    e += c.value;
  table[0] = e;

  std::uint64_t index = 0;
  for (std::uint64_t k = 1; k < size; ++k) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(k));
    // flipping z_b changes every term containing it by -2 * term
    double local = m.fields()[bit];
    for (const auto &[other, value] : adj[bit])
      local += value * z[other];
    e -= 2.0 * z[bit] * local;
    z[bit] = -z[bit];
    index ^= std::uint64_t{1} << bit;
    table[index] = e;
  }
  return table;
}

} // namespace qaoa
