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

#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qaoa/encoding.hpp"

using namespace qaoa;

TEST_CASE("maxcut_to_qubo on a single edge") {
  const auto q = maxcut_to_qubo(oracle::single_edge());
  CHECK(q.coeff(0, 0) == -1.0);
  CHECK(q.coeff(1, 1) == -1.0);
  CHECK(q.coeff(0, 1) == 2.0);
  CHECK(q.offset() == 0.0);
  // enumerate all four assignments
  CHECK(q.evaluate({0, 0}) == 0.0);
  CHECK(q.evaluate({0, 1}) == -1.0);
  CHECK(q.evaluate({1, 0}) == -1.0);
  CHECK(q.evaluate({1, 1}) == 0.0);
}

TEST_CASE("maxcut_to_qubo edge cases") {
  const auto empty = maxcut_to_qubo(Graph(3, {}));
  CHECK(empty.terms().empty());
  for (std::uint64_t m = 0; m < 8; ++m)
    CHECK(empty.evaluate(oracle::bits_of(m, 3)) == 0.0);

  const auto k3 = maxcut_to_qubo(oracle::triangle());
  double best = 0.0;
  for (std::uint64_t m = 0; m < 8; ++m)
    best = std::min(best, k3.evaluate(oracle::bits_of(m, 3)));
  CHECK(best == -2.0);
}

TEST_CASE("qubo_to_ising examples") {
  SUBCASE("single edge") {
    const auto m = qubo_to_ising(maxcut_to_qubo(oracle::single_edge()));
    CHECK(m.fields()[0] == 0.0);
    CHECK(m.fields()[1] == 0.0);
    CHECK(m.coupling(0, 1) == 0.5);
    CHECK(m.offset() == -0.5);
    CHECK(ising_energy(m, {0, 1}) == -1.0);
    CHECK(ising_energy(m, {0, 0}) == 0.0);
    CHECK(ising_energy(m, {1, 1}) == 0.0);
  }
  SUBCASE("single linear term") {
    Qubo q(1);
    q.add(0, 0, 3.0);
    const auto m = qubo_to_ising(q);
    CHECK(m.fields()[0] == -1.5);
    CHECK(m.offset() == 1.5);
    CHECK(ising_energy(m, {0}) == q.evaluate({0}));
    CHECK(ising_energy(m, {1}) == q.evaluate({1}));
  }
  SUBCASE("zero QUBO") {
    const auto m = qubo_to_ising(Qubo(4));
    CHECK(m.couplings().empty());
    CHECK(m.offset() == 0.0);
    for (double h : m.fields())
      CHECK(h == 0.0);
    CHECK(ising_energy(m, {1, 0, 1, 1}) == 0.0);
  }
}

TEST_CASE("ising_energy length mismatch") {
  const auto m = qubo_to_ising(maxcut_to_qubo(oracle::triangle()));
  CHECK_THROWS_AS(ising_energy(m, {0, 1}), std::invalid_argument);
}

TEST_CASE("energies match -cut on every assignment") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 9;
    auto g = generate_random_graph(n, rng.uniform(0.2, 1.0), rng.next_u64());
    if (trial % 3 == 0) {
      std::vector<Edge> e = g.edges();
      for (auto &x : e)
        x.w = rng.uniform(0.1, 3.0);
      g = Graph(n, e);
    }
    const auto q = maxcut_to_qubo(g);
    const auto m = qubo_to_ising(q);
    const auto table = energy_table(m);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const auto bits = oracle::bits_of(mask, n);
      const double cut = cut_value(g, bits);
      CHECK(std::abs(q.evaluate(bits) + cut) <= 1e-12);
      CHECK(std::abs(ising_energy(m, bits) + cut) <= 1e-12);
      CHECK(std::abs(table[mask] + cut) <= 1e-12);
    }
  }
}

TEST_CASE("unweighted max-cut models have no fields") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = generate_random_graph(10, 0.5, rng.next_u64());
    const auto m = qubo_to_ising(maxcut_to_qubo(g));
    for (double h : m.fields())
      CHECK(h == 0.0);
    CHECK(m.couplings().size() == g.num_edges());
  }
}

TEST_CASE("argmin energy equals argmax cut") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = generate_random_graph(8, 0.6, rng.next_u64());
    const auto table = energy_table(qubo_to_ising(maxcut_to_qubo(g)));
    const double emin = *std::min_element(table.begin(), table.end());
    const double best = oracle::naive_max_cut(g);
    std::set<std::uint64_t> by_energy, by_cut;
    for (std::uint64_t m = 0; m < table.size(); ++m) {
      if (table[m] == emin)
        by_energy.insert(m);
      if (cut_value(g, oracle::bits_of(m, 8)) == best)
        by_cut.insert(m);
    }
    CHECK(by_energy == by_cut);
  }
}

TEST_CASE("couplings keep insertion order") {
  const Graph g(4, {{2, 3, 1.0}, {0, 1, 1.0}, {1, 3, 1.0}});
  const auto m = qubo_to_ising(maxcut_to_qubo(g));
  REQUIRE(m.couplings().size() == 3);
  CHECK(m.couplings()[0].i == 2);
  CHECK(m.couplings()[1].i == 0);
  CHECK(m.couplings()[2].j == 3);
}
