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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/encoding.hpp"

namespace qaoa {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultMaxQubits = 26;

/// Raised when a state would exceed the configured qubit limit.
class CapacityError : public std::runtime_error {
public:
  CapacityError(std::size_t num_qubits, std::size_t max_qubits);
  std::size_t required_bytes() const { return required_bytes_; }

private:
  std::size_t required_bytes_;
};

/// Dense state over n qubits. Little-endian: bit i of a basis index is
/// qubit i, which is also node i of the encoded graph.
class StateVector {
public:
  /// |0...0>
  explicit StateVector(std::size_t num_qubits,
                       std::size_t max_qubits = kDefaultMaxQubits);
  /// Length must be a power of two; the vector is taken as is (not
  /// renormalized).
  explicit StateVector(std::vector<Amplitude> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

  void apply(const Gate &g);
  void apply(const Circuit &c);

  double norm_squared() const;
  std::vector<double> probabilities() const;

private:
  void apply_single(std::uint32_t q, const std::array<Amplitude, 4> &m);
  void apply_rz(std::uint32_t q, double angle);
  void apply_rzz(std::uint32_t a, std::uint32_t b, double angle);
  void apply_cx(std::uint32_t control, std::uint32_t target);

  std::size_t num_qubits_;
  std::vector<Amplitude> amps_;
};

/// U_c |0...0>.
StateVector simulate(const Circuit &c,
                     std::size_t max_qubits = kDefaultMaxQubits);

/// sum_z |a_z|^2 E(z); the Hamiltonian is diagonal so no operator is formed.
double expectation_diagonal(const StateVector &s, const IsingModel &m);
/// Same with a precomputed energy_table(m).
double expectation_diagonal(const StateVector &s,
                            std::span<const double> energies);

/// Shot histogram keyed by basis index.
struct Counts {
  std::size_t num_qubits = 0;
  std::uint64_t shots = 0;
  std::map<std::uint64_t, std::uint64_t> by_index;

  /// Character i is qubit i.
  std::string bitstring(std::uint64_t index) const;
  std::uint64_t count(const std::string &bits) const;
  std::map<std::string, std::uint64_t> by_bitstring() const;

  friend bool operator==(const Counts &, const Counts &) = default;
};

/// Assignment (one entry per qubit) for a basis index.
Assignment index_to_assignment(std::uint64_t index, std::size_t num_qubits);

/// Multinomial measurement in the computational basis: each shot draws
/// u = Rng(seed).uniform() * total_probability and takes the first index
/// whose cumulative probability exceeds u.
Counts sample(const StateVector &s, std::uint64_t shots, std::uint64_t seed);

} // namespace qaoa
