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

#include <algorithm>
#include <cmath>
#include <complex>

#include "doctest.h"
#include "oracles.hpp"
#include "qaoa/circuit.hpp"

using namespace qaoa;

namespace {

IsingModel maxcut_model(const Graph &g) {
  return qubo_to_ising(maxcut_to_qubo(g));
}

Circuit ansatz(const IsingModel &m, std::size_t p, Strategy s,
               double gamma = 0.37, double beta = 0.21) {
  std::vector<double> gammas(p), betas(p);
  for (std::size_t k = 0; k < p; ++k) {
    gammas[k] = gamma * static_cast<double>(k + 1);
    betas[k] = beta / static_cast<double>(k + 1);
  }
  return build_qaoa_ansatz(m, p, gammas, betas, s);
}

} // namespace

TEST_CASE("circuit validates gates") {
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::h(2)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::cx(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(c.add(Gate::rzz(0, 5, 0.1)), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(0), std::invalid_argument);
  c.add(Gate::h(1));
  CHECK(c.size() == 1);
}

TEST_CASE("single-edge p=1 ansatz") {
  const double gamma = 0.8, beta = 0.3;
  const auto m = maxcut_model(oracle::single_edge());
  const std::vector<double> gs{gamma}, bs{beta};
  const auto c = build_qaoa_ansatz(m, 1, gs, bs, Strategy::naive);
  const std::vector<Gate> expected = {Gate::h(0), Gate::h(1),
                                      Gate::rzz(0, 1, gamma),
                                      Gate::rx(0, 2 * beta),
                                      Gate::rx(1, 2 * beta)};
  CHECK(c.gates() == expected);

  // mixer * phase separator * (H (x) H), built from matrix definitions
  using oracle::Matrix;
  const auto table = energy_table(m);
  Matrix phase(4);
  for (std::size_t z = 0; z < 4; ++z)
    phase(z, z) = std::exp(std::complex<double>(0.0, -gamma * table[z]));
  const Matrix mixer =
      oracle::kron(oracle::exp_involution(oracle::pauli_x(), 2 * beta),
                   oracle::exp_involution(oracle::pauli_x(), 2 * beta));
  const Matrix h = oracle::single_qubit_matrix(Gate::h(0));
  const Matrix expected_u =
      oracle::multiply(mixer, oracle::multiply(phase, oracle::kron(h, h)));
  CHECK(oracle::distance_up_to_phase(oracle::circuit_unitary(c), expected_u) <
        1e-12);
}

TEST_CASE("ansatz preconditions") {
  const auto m = maxcut_model(oracle::triangle());
  const std::vector<double> one{0.1}, two{0.1, 0.2};
  CHECK_THROWS_AS(build_qaoa_ansatz(m, 0, {}, {}, Strategy::naive),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_qaoa_ansatz(m, 2, one, two, Strategy::naive),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_qaoa_ansatz(m, 1, two, one, Strategy::naive),
                  std::invalid_argument);
}

TEST_CASE("triangle needs three rounds") {
  const auto rounds = coupling_rounds(maxcut_model(oracle::triangle()));
  REQUIRE(rounds.size() == 3);
  for (const auto &r : rounds)
    CHECK(r.size() == 1);
}

TEST_CASE("fields become RZ gates") {
  IsingModel m(2);
  m.add_field(0, 0.25);
  m.add_coupling(0, 1, 1.0);
  Circuit c(2);
  append_phase_separator(c, m, 0.5, Strategy::naive);
  const std::vector<Gate> expected = {Gate::rz(0, 0.25), Gate::rzz(0, 1, 1.0)};
  CHECK(c.gates() == expected);
}

TEST_CASE("decompose") {
  Circuit c(2);
  c.add(Gate::rzz(0, 1, 0.7));
  const auto d = decompose(c);
  const std::vector<Gate> expected = {Gate::cx(0, 1), Gate::rz(1, 0.7),
                                      Gate::cx(0, 1)};
  CHECK(d.gates() == expected);
  CHECK(oracle::distance_up_to_phase(oracle::circuit_unitary(c),
                                     oracle::circuit_unitary(d)) < 1e-14);

  Circuit plain(3);
  plain.add(Gate::h(0)).add(Gate::rx(1, 0.2)).add(Gate::cx(2, 0));
  CHECK(decompose(plain) == plain);

  const auto m = maxcut_model(oracle::single_edge());
  const auto compiled = decompose(ansatz(m, 1, Strategy::naive));
  CHECK(compiled.size() == 7);
  CHECK(depth(compiled) == 5);
  const auto counts = gate_counts(compiled);
  CHECK(counts[GateKind::H] == 2);
  CHECK(counts[GateKind::CX] == 2);
  CHECK(counts[GateKind::RZ] == 1);
  CHECK(counts[GateKind::RX] == 2);
  CHECK(counts[GateKind::RZZ] == 0);
}

TEST_CASE("decompose preserves unitaries of random circuits") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 3;
    const auto c = oracle::random_circuit(rng, n, 12);
    CHECK(oracle::distance_up_to_phase(oracle::circuit_unitary(c),
                                       oracle::circuit_unitary(decompose(c))) <
          1e-10);
  }
}

TEST_CASE("depth") {
  Circuit two(2);
  two.add(Gate::h(0)).add(Gate::h(1));
  CHECK(depth(two) == 1);

  Circuit wide(6);
  for (std::uint32_t q = 0; q < 6; ++q)
    wide.add(Gate::rx(q, 0.1));
  CHECK(depth(wide) == 1);

  CHECK(depth(Circuit(3)) == 0);

  Circuit chain(3);
  chain.add(Gate::cx(0, 1)).add(Gate::cx(1, 2)).add(Gate::h(0));
  CHECK(depth(chain) == 2);

  // a barrier holds back the h on qubit 0
  Circuit held(3);
  held.add(Gate::cx(0, 1)).add(Gate::cx(1, 2)).barrier().add(Gate::h(0));
  CHECK(depth(held) == 3);
}

TEST_CASE("gate_counts") {
  CHECK(gate_counts(Circuit(2)).total() == 0);
  const auto c = ansatz(maxcut_model(oracle::triangle()), 1, Strategy::naive);
  const auto counts = gate_counts(c);
  CHECK(counts[GateKind::RZZ] == 3);
  CHECK(counts[GateKind::H] == 3);
  CHECK(counts[GateKind::RX] == 3);
  CHECK(counts[GateKind::CX] == 0);
  CHECK(counts[GateKind::RZ] == 0);
}

TEST_CASE("circuit text format") {
  CHECK(format_gate(Gate::h(0)) == "H 0");
  CHECK(format_gate(Gate::rzz(0, 1, 0.5)) == "RZZ 0 1 0.5");
  CHECK(format_gate(Gate::cx(3, 1)) == "CX 3 1");
  CHECK(format_gate(Gate::rx(2, 0.1)) == "RX 2 0.10000000000000001");
  Circuit one(1);
  one.add(Gate::h(0));
  CHECK(export_circuit_text(one) == "H 0\n");

  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.next_u64() % 5;
    auto c = oracle::random_circuit(rng, n, 15);
    c.barrier().add(Gate::h(0));
    const auto text = export_circuit_text(c);
    const auto back = parse_circuit_text(text, n);
    CHECK(back == c);
    CHECK(export_circuit_text(back) == text);
  }

  const auto a = ansatz(maxcut_model(oracle::petersen()), 2, Strategy::scheduled);
  CHECK(parse_circuit_text(export_circuit_text(a)) == a);

  CHECK_THROWS_AS(parse_circuit_text("FOO 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit_text("RX 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_circuit_text("CX 0 0\n"), std::invalid_argument);
}

TEST_CASE("coupling rounds are proper colorings within max degree + 1") {
  Rng rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng.next_u64() % 18;
    const auto g = generate_random_graph(n, rng.uniform(0.1, 1.0), rng.next_u64());
    const auto m = maxcut_model(g);
    const auto rounds = coupling_rounds(m);
    const auto deg = g.degrees();
    const auto max_degree = *std::max_element(deg.begin(), deg.end());
    CHECK(rounds.size() <= max_degree + 1);
    std::size_t covered = 0;
    for (const auto &r : rounds) {
      CHECK(!r.empty());
      std::vector<int> seen(n, 0);
      for (const auto &k : r) {
        CHECK(++seen[k.i] == 1);
        CHECK(++seen[k.j] == 1);
        ++covered;
      }
    }
    CHECK(covered == m.couplings().size());

    // one scheduled phase separator: RZZ depth <= RZZ count
    Circuit naive(n), scheduled(n);
    append_phase_separator(naive, m, 0.3, Strategy::naive);
    append_phase_separator(scheduled, m, 0.3, Strategy::scheduled);
    CHECK(depth(scheduled) <= gate_counts(naive)[GateKind::RZZ]);
    CHECK(depth(scheduled) <= rounds.size());
  }
}

TEST_CASE("naive and scheduled ansatz unitaries agree") {
  Rng rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 3;
    const auto m = maxcut_model(generate_random_graph(n, 0.8, rng.next_u64()));
    if (m.couplings().empty())
      continue;
    const double g = rng.uniform(0, 3), b = rng.uniform(0, 3);
    const auto un = oracle::circuit_unitary(ansatz(m, 2, Strategy::naive, g, b));
    const auto us =
        oracle::circuit_unitary(ansatz(m, 2, Strategy::scheduled, g, b));
    CHECK(oracle::distance_up_to_phase(un, us) < 1e-10);
  }
}

TEST_CASE("depth is linear in layers") {
  Rng rng(66);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng.next_u64() % 14;
    const auto m =
        maxcut_model(generate_random_graph(n, rng.uniform(0.2, 0.9), rng.next_u64()));
    for (auto s : {Strategy::naive, Strategy::scheduled}) {
      const auto d1 = depth(decompose(ansatz(m, 1, s)));
      for (std::size_t p : {2U, 3U, 5U})
        CHECK(depth(decompose(ansatz(m, p, s))) == 1 + p * (d1 - 1));
    }
  }
}

TEST_CASE("depth is at least the busiest qubit's gate count") {
  Rng rng(67);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng.next_u64() % 10;
    const auto m = maxcut_model(generate_random_graph(n, 0.5, rng.next_u64()));
    for (auto s : {Strategy::naive, Strategy::scheduled}) {
      for (const auto &c : {ansatz(m, 2, s), decompose(ansatz(m, 2, s))}) {
        std::vector<std::size_t> load(n, 0);
        for (const auto &g : c.gates())
          for (auto q : g.targets())
            ++load[q];
        CHECK(depth(c) >= *std::max_element(load.begin(), load.end()));
      }
    }
  }
}
