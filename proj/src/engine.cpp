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

#include "qaoa/engine.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "qaoa/optimizer.hpp"
#include "qaoa/rng.hpp"

namespace qaoa {

QaoaProblem QaoaProblem::maxcut(const Graph &g) {
  return QaoaProblem(qubo_to_ising(maxcut_to_qubo(g)));
}

double QaoaProblem::cost(const Assignment &bits) const {
  return classical_cost ? classical_cost(bits) : ising_energy(ising, bits);
}

Circuit QaoaProblem::ansatz(std::span<const double> params, std::size_t layers,
                            Strategy strategy) const {
  if (layers < 1)
    throw std::invalid_argument("QAOA needs at least one layer");
  if (params.size() != 2 * layers)
    throw std::invalid_argument(fmt::format(
        "expected {} parameters for {} layers, got {}", 2 * layers, layers,
        params.size()));
  if (!initial_state || !phase_separator || !mixer)
    throw std::invalid_argument("QAOA problem is missing a component");
  Circuit c(num_qubits());
  initial_state(c);
  c.barrier();
  for (std::size_t k = 0; k < layers; ++k) {
    phase_separator(c, ising, params[k], strategy);
    mixer(c, params[layers + k]);
    c.barrier();
  }
  if (c.num_qubits() != num_qubits())
    throw std::logic_error("ansatz builders changed the circuit width");
  return c;
}

std::string_view mode_name(ObjectiveMode m) {
  return m == ObjectiveMode::exact_expectation ? "exact" : "sampled";
}

ObjectiveMode parse_mode(std::string_view name) {
  if (name == "exact" || name == "exact_expectation")
    return ObjectiveMode::exact_expectation;
  if (name == "sampled" || name == "sampled_expectation")
    return ObjectiveMode::sampled_expectation;
  throw std::invalid_argument(fmt::format("unknown objective mode '{}'", name));
}

void QaoaConfig::validate() const {
  if (layers < 1)
    throw std::invalid_argument("layers must be at least 1");
  if (shots < 1)
    throw std::invalid_argument("shots must be at least 1");
}

std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t evaluation) {
  return hash64(seed, evaluation);
}

QaoaObjective::QaoaObjective(const QaoaProblem &problem,
                             const QaoaConfig &config)
    : problem_(problem), config_(config) {
  config_.validate();
  if (problem_.num_qubits() > config_.max_qubits)
    throw CapacityError(problem_.num_qubits(), config_.max_qubits);
  if (config_.mode == ObjectiveMode::exact_expectation)
    energies_ = energy_table(problem_.ising);
}

double QaoaObjective::mean_cost(const Counts &counts) const {
  double total = 0.0;
  for (const auto &[index, n] : counts.by_index)
    total += problem_.cost(index_to_assignment(index, counts.num_qubits)) *
             static_cast<double>(n);
  return total / static_cast<double>(counts.shots);
}

double QaoaObjective::evaluate(std::span<const double> params,
                               std::uint64_t evaluation) const {
  const auto circuit =
      problem_.ansatz(params, config_.layers, config_.strategy);
  const auto state = simulate(circuit, config_.max_qubits);
  if (config_.mode == ObjectiveMode::exact_expectation)
    return expectation_diagonal(state, energies_);
  return mean_cost(
      sample(state, config_.shots, shot_seed(config_.seed, evaluation)));
}

double QaoaObjective::operator()(std::span<const double> params) {
  return evaluate(params, evaluations_++);
}

double objective(const QaoaProblem &problem, const QaoaConfig &config,
                 std::span<const double> params, std::uint64_t evaluation) {
  return QaoaObjective(problem, config).evaluate(params, evaluation);
}

QaoaResult run_qaoa(const QaoaProblem &problem, const QaoaConfig &config,
                    double optimum) {
  if (!(optimum > 0.0))
    throw std::invalid_argument("optimum must be positive");
  QaoaObjective f(problem, config);

  Rng init(hash64(config.seed, kInitStream));
  std::vector<double> x0(2 * config.layers);
  for (auto &x : x0)
    x = init.uniform(0.0, std::numbers::pi);

  OptimizerConfig opt;
  opt.max_evaluations = config.max_evaluations;
  const auto opt_result =
      minimize([&f](std::span<const double> p) { return f(p); }, x0, opt);

  QaoaResult result;
  result.best_params = opt_result.best_params;
  result.optimizer_value = opt_result.best_value;
  result.converged = opt_result.converged;
  result.evaluations = opt_result.evaluations;

  const auto circuit =
      problem.ansatz(result.best_params, config.layers, config.strategy);
  const auto state = simulate(circuit, config.max_qubits);
  result.final_counts =
      sample(state, config.shots, shot_seed(config.seed, result.evaluations));
  result.expected_cost = f.mean_cost(result.final_counts);
  result.best_sampled_cost = std::numeric_limits<double>::infinity();
  for (const auto &entry : result.final_counts.by_index)
    result.best_sampled_cost = std::min(
        result.best_sampled_cost,
        problem.cost(index_to_assignment(entry.first, problem.num_qubits())));
  result.ar_expectation = -result.expected_cost / optimum;
  result.ar_best = -result.best_sampled_cost / optimum;

  const auto compiled = decompose(circuit);
  result.compiled_depth = depth(compiled);
  result.gate_counts = gate_counts(compiled);
  return result;
}

} // namespace qaoa
