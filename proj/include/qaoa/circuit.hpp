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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaoa/encoding.hpp"

namespace qaoa {

enum class GateKind : std::uint8_t { H, RX, RZ, RZZ, CX };
inline constexpr std::size_t kNumGateKinds = 5;
inline constexpr std::array<GateKind, kNumGateKinds> kAllGateKinds = {
    GateKind::H, GateKind::RX, GateKind::RZ, GateKind::RZZ, GateKind::CX};

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

/// Matrices (qubit order as listed; CX has control first):
///   H        = [[1, 1], [1, -1]] / sqrt(2)
///   RX(t)    = exp(-i t X / 2)
///   RZ(t)    = diag(e^{-it/2}, e^{it/2})
///   RZZ(t)   = exp(-i t Z(x)Z / 2)
///   CX(c, t) flips t when c is set
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::uint32_t, 2> qubits{0, 0};
  double angle = 0.0;

  static Gate h(std::uint32_t q) { return {GateKind::H, {q, 0}, 0.0}; }
  static Gate rx(std::uint32_t q, double t) { return {GateKind::RX, {q, 0}, t}; }
  static Gate rz(std::uint32_t q, double t) { return {GateKind::RZ, {q, 0}, t}; }
  static Gate rzz(std::uint32_t a, std::uint32_t b, double t) {
    return {GateKind::RZZ, {a, b}, t};
  }
  static Gate cx(std::uint32_t control, std::uint32_t target) {
    return {GateKind::CX, {control, target}, 0.0};
  }

  std::size_t arity() const { return gate_arity(kind); }
  std::span<const std::uint32_t> targets() const {
    return {qubits.data(), arity()};
  }

  friend bool operator==(const Gate &, const Gate &) = default;
};

class Circuit {
public:
  explicit Circuit(std::size_t num_qubits);

  /// Throws std::invalid_argument on out-of-range or repeated qubits.
  Circuit &add(const Gate &gate);

  /// Synchronization point before the next gate: no later gate is scheduled
  /// before every earlier one has finished. Not a gate; no unitary effect.
  Circuit &barrier();

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  /// Gate indices that start a new synchronized segment, ascending.
  const std::vector<std::size_t> &barriers() const { return barriers_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  friend bool operator==(const Circuit &, const Circuit &) = default;

private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::vector<std::size_t> barriers_;
};

/// How the interaction terms of one phase separator are ordered.
///   naive:     coupling insertion order (the graph's edge order)
///   scheduled: greedy edge coloring, one round per color
enum class Strategy { naive, scheduled };

std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// Edge coloring of the coupling graph. Couplings are visited by descending
/// degree sum (ties keep insertion order) and greedily take the smallest
/// color free at both endpoints. If that needs more than max_degree + 1
/// colors, the same order is recolored with Misra-Gries, which never does.
/// Each returned round touches every qubit at most once.
std::vector<std::vector<Coupling>> coupling_rounds(const IsingModel &m);

void append_uniform_superposition(Circuit &c);

/// exp(-i gamma C) with the offset's global phase dropped: RZ(2 gamma h_i)
/// for nonzero fields, then RZZ(2 gamma J_ij) for nonzero couplings.
void append_phase_separator(Circuit &c, const IsingModel &m, double gamma,
                            Strategy strategy);

/// exp(-i beta sum_i X_i) as RX(2 beta) on every qubit.
void append_transverse_mixer(Circuit &c, double beta);

/// H on all qubits, then p blocks of phase separator and mixer, with a
/// barrier after the initial layer and after every block.
Circuit build_qaoa_ansatz(const IsingModel &m, std::size_t layers,
                          std::span<const double> gammas,
                          std::span<const double> betas, Strategy strategy);

/// Rewrites to the {H, RX, RZ, CX} basis: RZZ(a, b, t) becomes
/// CX(a, b) RZ(b, t) CX(a, b). The unitary is preserved exactly.
Circuit decompose(const Circuit &c);

/// ASAP layer count; gates conflict iff they share a qubit, and a barrier
/// starts every later gate after the deepest earlier one.
std::size_t depth(const Circuit &c);

struct GateCounts {
  std::array<std::size_t, kNumGateKinds> by_kind{};

  std::size_t operator[](GateKind k) const {
    return by_kind[static_cast<std::size_t>(k)];
  }
  std::size_t total() const;
  friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

GateCounts gate_counts(const Circuit &c);

/// One gate per line: "KIND q [q] [angle]", angles with 17 significant
/// digits, '\n' terminated; a barrier is the line "BARRIER". The width is
/// not part of the text; parsing
/// infers the smallest width that fits unless one is given.
std::string export_circuit_text(const Circuit &c);
Circuit parse_circuit_text(std::string_view text, std::size_t num_qubits = 0);

/// The gate part of export_circuit_text for a single gate, e.g. "RZZ 0 1 0.5".
std::string format_gate(const Gate &g);

} // namespace qaoa
