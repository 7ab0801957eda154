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

#include "qaoa/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qaoa/rng.hpp"

namespace qaoa {

CapacityError::CapacityError(std::size_t num_qubits, std::size_t max_qubits)
    : std::runtime_error(fmt::format(
          "{} qubits exceeds the limit of {} (state needs {:.3g} GiB)",
          num_qubits, max_qubits,
          std::ldexp(static_cast<double>(sizeof(Amplitude)),
                     static_cast<int>(num_qubits)) /
              (1024.0 * 1024.0 * 1024.0))),
      required_bytes_(num_qubits < 8 * sizeof(std::size_t) - 5
                          ? sizeof(Amplitude) << num_qubits
                          : SIZE_MAX) {}

StateVector::StateVector(std::size_t num_qubits, std::size_t max_qubits)
    : num_qubits_(num_qubits) {
  if (num_qubits > max_qubits)
    throw CapacityError(num_qubits, max_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Amplitude> amplitudes)
    : num_qubits_(0), amps_(std::move(amplitudes)) {
  if (amps_.empty() || !std::has_single_bit(amps_.size()))
    throw std::invalid_argument("amplitude count must be a power of two");
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

void StateVector::apply_single(std::uint32_t q,
                               const std::array<Amplitude, 4> &m) {
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      const Amplitude a0 = amps_[i];
      const Amplitude a1 = amps_[i + stride];
      amps_[i] = m[0] * a0 + m[1] * a1;
      amps_[i + stride] = m[2] * a0 + m[3] * a1;
    }
  }
}

void StateVector::apply_rz(std::uint32_t q, double angle) {
  const Amplitude p0 = std::polar(1.0, -angle / 2.0);
  const Amplitude p1 = std::polar(1.0, angle / 2.0);
  const std::size_t stride = std::size_t{1} << q;
  const std::size_t dim = amps_.size();
  for (std::size_t block = 0; block < dim; block += 2 * stride) {
    for (std::size_t i = block; i < block + stride; ++i) {
      amps_[i] *= p0;
      amps_[i + stride] *= p1;
    }
  }
}

void StateVector::apply_rzz(std::uint32_t a, std::uint32_t b, double angle) {
  // even parity picks up e^{-it/2}, odd parity e^{+it/2}
  const std::array<Amplitude, 2> phase = {std::polar(1.0, -angle / 2.0),
                                          std::polar(1.0, angle / 2.0)};
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i)
    amps_[i] *= phase[((i >> a) ^ (i >> b)) & 1U];
}

void StateVector::apply_cx(std::uint32_t control, std::uint32_t target) {
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i)
    if ((i & cmask) && !(i & tmask))
      std::swap(amps_[i], amps_[i | tmask]);
}

void StateVector::apply(const Gate &g) {
  for (auto q : g.targets())
    if (q >= num_qubits_)
      throw std::invalid_argument(fmt::format(
          "gate on qubit {} for a {}-qubit state", q, num_qubits_));
  switch (g.kind) {
  case GateKind::H: {
    constexpr double r = std::numbers::sqrt2 / 2.0;
    apply_single(g.qubits[0], {Amplitude{r}, Amplitude{r}, Amplitude{r},
                               Amplitude{-r}});
    break;
  }
  case GateKind::RX: {
    const double c = std::cos(g.angle / 2.0);
    const double s = std::sin(g.angle / 2.0);
    apply_single(g.qubits[0], {Amplitude{c}, Amplitude{0.0, -s},
                               Amplitude{0.0, -s}, Amplitude{c}});
    break;
  }
  case GateKind::RZ:
    apply_rz(g.qubits[0], g.angle);
    break;
  case GateKind::RZZ:
    apply_rzz(g.qubits[0], g.qubits[1], g.angle);
    break;
  case GateKind::CX:
    apply_cx(g.qubits[0], g.qubits[1]);
    break;
  }
}

void StateVector::apply(const Circuit &c) {
  if (c.num_qubits() != num_qubits_)
    throw std::invalid_argument(fmt::format(
        "{}-qubit circuit on a {}-qubit state", c.num_qubits(), num_qubits_));
  for (const auto &g : c.gates())
    apply(g);
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto &a : amps_)
    total += std::norm(a);
  return total;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(),
                 [](const Amplitude &a) { return std::norm(a); });
  return p;
}

StateVector simulate(const Circuit &c, std::size_t max_qubits) {
  StateVector s(c.num_qubits(), max_qubits);
  s.apply(c);
  return s;
}

double expectation_diagonal(const StateVector &s,
                            std::span<const double> energies) {
  if (energies.size() != s.dimension())
    throw std::invalid_argument("energy table and state widths differ");
  // Compensated extended-precision sums, divided by the norm so rounding
  // drift in the amplitudes cancels.
  struct Sum {
    long double s = 0.0L, c = 0.0L;
    void add(long double x) {
      const long double t = s + x;
      c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
      s = t;
    }
    long double value() const { return s + c; }
  };
  Sum total, norm;
  const auto amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const long double p = std::norm(amps[i]);
    total.add(p * energies[i]);
    norm.add(p);
  }
  return static_cast<double>(total.value() / norm.value());
}

double expectation_diagonal(const StateVector &s, const IsingModel &m) {
  if (m.num_spins() != s.num_qubits())
    throw std::invalid_argument(
        fmt::format("{}-spin model on a {}-qubit state", m.num_spins(),
                    s.num_qubits()));
  const auto table = energy_table(m);
  return expectation_diagonal(s, table);
}

std::string Counts::bitstring(std::uint64_t index) const {
  std::string s(num_qubits, '0');
  for (std::size_t i = 0; i < num_qubits; ++i)
    if ((index >> i) & 1U)
      s[i] = '1';
  return s;
}

std::uint64_t Counts::count(const std::string &bits) const {
  if (bits.size() != num_qubits)
    return 0;
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1')
      index |= std::uint64_t{1} << i;
  auto it = by_index.find(index);
  return it == by_index.end() ? 0 : it->second;
}

std::map<std::string, std::uint64_t> Counts::by_bitstring() const {
  std::map<std::string, std::uint64_t> out;
  for (const auto &[index, n] : by_index)
    out.emplace(bitstring(index), n);
  return out;
}

Assignment index_to_assignment(std::uint64_t index, std::size_t num_qubits) {
  Assignment bits(num_qubits);
  for (std::size_t i = 0; i < num_qubits; ++i)
    bits[i] = static_cast<std::uint8_t>((index >> i) & 1U);
  return bits;
}

Counts sample(const StateVector &s, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1)
    throw std::invalid_argument("need at least one shot");
  const auto amps = s.amplitudes();
  std::vector<double> cdf(amps.size());
  double running = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    running += p;
    cdf[i] = running;
    if (p > 0.0)
      last_nonzero = i;
  }
  if (!(running > 0.0))
    throw std::invalid_argument("cannot sample a zero state");

  Counts counts;
  counts.num_qubits = s.num_qubits();
  counts.shots = shots;
  Rng rng(seed);
  for (std::uint64_t k = 0; k < shots; ++k) {
    const double u = rng.uniform() * running;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    auto index = it == cdf.end() ? last_nonzero
                                 : static_cast<std::size_t>(it - cdf.begin());
    ++counts.by_index[index];
  }
  return counts;
}

} // namespace qaoa
