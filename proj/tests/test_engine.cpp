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
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qaoa/engine.hpp"

using namespace qaoa;

namespace {

QaoaConfig exact(std::size_t layers = 1) {
  QaoaConfig c;
  c.layers = layers;
  c.mode = ObjectiveMode::exact_expectation;
  return c;
}

} // namespace

TEST_CASE("config validation") {
  QaoaConfig c;
  CHECK_NOTHROW(c.validate());
  c.layers = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.layers = 1;
  c.shots = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK(parse_mode("exact") == ObjectiveMode::exact_expectation);
  CHECK(parse_mode("sampled") == ObjectiveMode::sampled_expectation);
  CHECK_THROWS_AS(parse_mode("cobyla"), std::invalid_argument);
}

TEST_CASE("params split into gammas then betas") {
  const auto p = QaoaProblem::maxcut(oracle::triangle());
  const std::vector<double> params{0.1, 0.2, 0.3, 0.4};
  const std::vector<double> gs{0.1, 0.2}, bs{0.3, 0.4};
  CHECK(p.ansatz(params, 2, Strategy::naive) ==
        build_qaoa_ansatz(p.ising, 2, gs, bs, Strategy::naive));
  CHECK_THROWS_AS(p.ansatz(params, 1, Strategy::naive), std::invalid_argument);
}

TEST_CASE("single edge at zero angles") {
  const auto p = QaoaProblem::maxcut(oracle::single_edge());
  const std::vector<double> zero{0.0, 0.0};
  CHECK(objective(p, exact(), zero) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("single edge grid search reaches the optimum") {
  const auto p = QaoaProblem::maxcut(oracle::single_edge());
  const auto cfg = exact();
  QaoaObjective f(p, cfg);
  double best = 0.0;
  for (int i = 0; i * 0.01 <= std::numbers::pi; ++i)
    for (int j = 0; j * 0.01 <= std::numbers::pi; ++j) {
      const std::vector<double> x{i * 0.01, j * 0.01};
      best = std::min(best, f.evaluate(x, 0));
    }
  // optimum cut is 1, so the ratio is -best
  CHECK(-best >= 1 - 1e-4);
  CHECK(-best <= 1 + 1e-12);
}

TEST_CASE("single edge closed form") {
  // the phase separator is exp(-i gamma cost) with cost = -cut, so
  // <cut> = 1/2 - sin(gamma) sin(4 beta) / 2
  const auto p = QaoaProblem::maxcut(oracle::single_edge());
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<double> x{rng.uniform(-4, 4), rng.uniform(-4, 4)};
    const double cut = 0.5 - 0.5 * std::sin(x[0]) * std::sin(4 * x[1]);
    CHECK(-objective(p, exact(), x) == doctest::Approx(cut).epsilon(1e-12));
  }
}

TEST_CASE("sampled expectation converges to the exact one") {
  for (const auto &g : {oracle::triangle(), generate_random_graph(6, 0.6, 9),
                        oracle::single_edge()}) {
    const auto p = QaoaProblem::maxcut(g);
    Rng rng(g.num_edges());
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<double> x(4);
      for (auto &v : x)
        v = rng.uniform(0, std::numbers::pi);
      QaoaConfig sampled;
      sampled.layers = 2;
      sampled.shots = 100000;
      sampled.seed = trial;
      const double e = objective(p, exact(2), x);
      const double s = objective(p, sampled, x);
      CHECK(std::abs(e - s) < 0.02);
    }
  }
}

TEST_CASE("objective symmetries") {
  Rng rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + rng.next_u64() % 6;
    const auto p = QaoaProblem::maxcut(generate_random_graph(n, 0.6, rng.next_u64()));
    const std::size_t layers = 1 + rng.next_u64() % 3;
    std::vector<double> x(2 * layers);
    for (auto &v : x)
      v = rng.uniform(0, std::numbers::pi);
    const double base = objective(p, exact(layers), x);

    auto shifted = x;
    shifted[rng.next_u64() % layers] += 2 * std::numbers::pi;
    shifted[layers + rng.next_u64() % layers] += std::numbers::pi;
    CHECK(objective(p, exact(layers), shifted) ==
          doctest::Approx(base).epsilon(1e-10).scale(1));

    auto negated = x;
    for (auto &v : negated)
      v = -v;
    CHECK(objective(p, exact(layers), negated) ==
          doctest::Approx(base).epsilon(1e-10).scale(1));

    auto cfg = exact(layers);
    cfg.strategy = Strategy::naive;
    const double naive = objective(p, cfg, x);
    cfg.strategy = Strategy::scheduled;
    CHECK(objective(p, cfg, x) == doctest::Approx(naive).epsilon(1e-10).scale(1));

    const std::vector<double> zero(2 * layers, 0.0);
    CHECK(objective(p, exact(layers), zero) ==
          doctest::Approx(p.ising.offset()).epsilon(1e-12));
  }
}

TEST_CASE("objective counts evaluations for shot seeds") {
  const auto p = QaoaProblem::maxcut(oracle::petersen());
  QaoaConfig cfg;
  cfg.shots = 500;
  cfg.seed = 13;
  QaoaObjective f(p, cfg);
  const std::vector<double> x{0.4, 0.9};
  const double first = f(x);
  const double second = f(x);
  CHECK(f.evaluations() == 2);
  CHECK(first == f.evaluate(x, 0));
  CHECK(second == f.evaluate(x, 1));
  CHECK(first != second);
}

TEST_CASE("custom ingredients") {
  auto p = QaoaProblem::maxcut(oracle::triangle());
  // a mixer that does nothing leaves |+>^n, whose expected cost is -W/2
  p.mixer = [](Circuit &, double) {};
  Rng rng(4);
  const std::vector<double> x{rng.uniform(0, 3), rng.uniform(0, 3)};
  CHECK(objective(p, exact(), x) == doctest::Approx(-1.5).epsilon(1e-12));

  // sampled mode evaluates the classical cost on each sample
  auto q = QaoaProblem::maxcut(oracle::triangle());
  q.classical_cost = [](const Assignment &) { return 7.0; };
  QaoaConfig cfg;
  cfg.shots = 100;
  CHECK(objective(q, cfg, x) == 7.0);
}

TEST_CASE("run_qaoa solves the single edge") {
  const auto p = QaoaProblem::maxcut(oracle::single_edge());
  int good = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto cfg = exact();
    cfg.seed = seed;
    const auto r = run_qaoa(p, cfg, 1.0);
    if (r.ar_expectation >= 0.999)
      ++good;
    CHECK(r.ar_best == 1.0);
  }
  CHECK(good >= 4);
}

TEST_CASE("run_qaoa results") {
  const auto g = generate_random_graph(7, 0.5, 2);
  const double opt = brute_force_optimum(g).value;
  const auto p = QaoaProblem::maxcut(g);
  QaoaConfig cfg;
  cfg.layers = 2;
  cfg.shots = 2000;
  cfg.max_evaluations = 300;
  cfg.seed = 5;
  const auto a = run_qaoa(p, cfg, opt);
  const auto b = run_qaoa(p, cfg, opt);
  CHECK(a.best_params == b.best_params);
  CHECK(a.final_counts == b.final_counts);
  CHECK(a.ar_expectation == b.ar_expectation);
  CHECK(a.best_params.size() == 4);
  CHECK(a.evaluations <= 300);
  CHECK(a.final_counts.shots == 2000);
  CHECK(a.ar_best >= a.ar_expectation);
  CHECK(a.ar_best <= 1.0 + 1e-12);
  CHECK(a.ar_expectation > 0.0);
  CHECK(a.compiled_depth ==
        depth(decompose(p.ansatz(a.best_params, 2, cfg.strategy))));
  CHECK(a.gate_counts[GateKind::RZZ] == 0);
  CHECK(a.gate_counts[GateKind::CX] == 2 * 2 * g.num_edges());

  cfg.seed = 6;
  CHECK(run_qaoa(p, cfg, opt).final_counts != a.final_counts);
}

TEST_CASE("run_qaoa with the smallest budget") {
  const auto p = QaoaProblem::maxcut(oracle::triangle());
  QaoaConfig cfg;
  cfg.layers = 3;
  cfg.max_evaluations = 2 * 3 + 2;
  cfg.shots = 50;
  const auto r = run_qaoa(p, cfg, 2.0);
  CHECK(r.evaluations <= cfg.max_evaluations);
  CHECK(r.final_counts.shots == 50);
}

TEST_CASE("run_qaoa preconditions") {
  const auto p = QaoaProblem::maxcut(oracle::triangle());
  CHECK_THROWS_AS(run_qaoa(p, QaoaConfig{}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(run_qaoa(p, QaoaConfig{}, -1.0), std::invalid_argument);
  QaoaConfig small;
  small.max_qubits = 2;
  CHECK_THROWS_AS(run_qaoa(p, small, 2.0), CapacityError);
}
