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
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/encoding.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

using InitialStateBuilder = std::function<void(Circuit &)>;
using PhaseSeparatorBuilder =
    std::function<void(Circuit &, const IsingModel &, double, Strategy)>;
using MixerBuilder = std::function<void(Circuit &, double)>;
using ClassicalCost = std::function<double(const Assignment &)>;

/// A QAOA instance as its four ingredients. The defaults give the standard
/// Max-Cut QAOA: |+>^n, exp(-i gamma C), exp(-i beta sum X).
struct QaoaProblem {
  explicit QaoaProblem(IsingModel model) : ising(std::move(model)) {}

  IsingModel ising;
  InitialStateBuilder initial_state = append_uniform_superposition;
  PhaseSeparatorBuilder phase_separator = append_phase_separator;
  MixerBuilder mixer = append_transverse_mixer;
  /// Cost of one measured assignment; empty means ising_energy(ising, .).
  ClassicalCost classical_cost;

  static QaoaProblem maxcut(const Graph &g);

  std::size_t num_qubits() const { return ising.num_spins(); }
  double cost(const Assignment &bits) const;

  /// params = (gamma_1..gamma_p, beta_1..beta_p).
  Circuit ansatz(std::span<const double> params, std::size_t layers,
                 Strategy strategy) const;
};

enum class ObjectiveMode { exact_expectation, sampled_expectation };

std::string_view mode_name(ObjectiveMode m);
ObjectiveMode parse_mode(std::string_view name);

struct QaoaConfig {
  std::size_t layers = 1;
  std::uint64_t shots = 10000;
  std::size_t max_evaluations = 5000;
  ObjectiveMode mode = ObjectiveMode::sampled_expectation;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::scheduled;
  std::size_t max_qubits = kDefaultMaxQubits;

  /// Throws std::invalid_argument on layers < 1 or shots < 1.
  void validate() const;
};

/// Shot seed of the evaluation with 0-based index k: hash64(seed, k).
std::uint64_t shot_seed(std::uint64_t seed, std::uint64_t evaluation);

/// Stream tag for the initial parameter draw: Rng(hash64(seed, kInitStream)).
inline constexpr std::uint64_t kInitStream = 0x696E6974ULL; // "init"

/// Stateful objective for one optimization run; each call uses the next
/// evaluation index for its shot seed.
class QaoaObjective {
public:
  QaoaObjective(const QaoaProblem &problem, const QaoaConfig &config);

  double operator()(std::span<const double> params);
  /// Pure evaluation at a given evaluation index.
  double evaluate(std::span<const double> params,
                  std::uint64_t evaluation) const;

  /// Counts-weighted mean cost.
  double mean_cost(const Counts &counts) const;
  std::uint64_t evaluations() const { return evaluations_; }

private:
  const QaoaProblem &problem_;
  QaoaConfig config_;
  std::vector<double> energies_; // exact mode only
  std::uint64_t evaluations_ = 0;
};

/// One-shot objective value (evaluation index defaults to 0).
double objective(const QaoaProblem &problem, const QaoaConfig &config,
                 std::span<const double> params, std::uint64_t evaluation = 0);

struct QaoaResult {
  std::vector<double> best_params;
  double optimizer_value = 0.0; // best objective seen by the optimizer
  bool converged = false;
  std::size_t evaluations = 0;
  Counts final_counts;
  double expected_cost = 0.0;     // mean cost of the final draw
  double best_sampled_cost = 0.0; // lowest cost among final samples
  double ar_expectation = 0.0;    // -expected_cost / optimum
  double ar_best = 0.0;           // -best_sampled_cost / optimum
  std::size_t compiled_depth = 0;
  GateCounts gate_counts;         // of the compiled final circuit
};

/// Full variational loop: random start in [0, pi)^(2p), Nelder-Mead on the
/// objective, then a fresh draw of `shots` samples at the best parameters
/// (shot seed index = number of evaluations spent). `optimum` is the
/// maximum cut, so approximation ratios are cut / optimum.
QaoaResult run_qaoa(const QaoaProblem &problem, const QaoaConfig &config,
                    double optimum);

} // namespace qaoa
