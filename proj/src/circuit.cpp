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

#include "qaoa/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace qaoa {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
  case GateKind::H:
    return "H";
  case GateKind::RX:
    return "RX";
  case GateKind::RZ:
    return "RZ";
  case GateKind::RZZ:
    return "RZZ";
  case GateKind::CX:
    return "CX";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  return kind == GateKind::RZZ || kind == GateKind::CX ? 2 : 1;
}

bool gate_has_angle(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RZ || kind == GateKind::RZZ;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits_ < 1)
    throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit &Circuit::add(const Gate &gate) {
  for (auto q : gate.targets())
    if (q >= num_qubits_)
      throw std::invalid_argument(fmt::format(
          "{} on qubit {} outside a {}-qubit circuit", gate_name(gate.kind), q,
          num_qubits_));
  if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1])
    throw std::invalid_argument(fmt::format("{} needs two distinct qubits",
                                            gate_name(gate.kind)));
  Gate g = gate;
  if (g.arity() == 1)
    g.qubits[1] = 0;
  if (!gate_has_angle(g.kind))
    g.angle = 0.0;
  gates_.push_back(g);
  return *this;
}

Circuit &Circuit::barrier() {
  if (!gates_.empty() && (barriers_.empty() || barriers_.back() != gates_.size()))
    barriers_.push_back(gates_.size());
  return *this;
}

std::string_view strategy_name(Strategy s) {
  return s == Strategy::naive ? "naive" : "scheduled";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "naive")
    return Strategy::naive;
  if (name == "scheduled")
    return Strategy::scheduled;
  throw std::invalid_argument(fmt::format("unknown strategy '{}'", name));
}

namespace {

using ColorMatrix = std::vector<std::vector<int>>;

// Smallest color free at both endpoints, in the given order.
std::vector<int> greedy_colors(std::size_t n, const std::vector<Coupling> &edges,
                               const std::vector<std::size_t> &order) {
  std::vector<std::vector<bool>> used(n);
  std::vector<int> color(edges.size(), -1);
  for (auto idx : order) {
    auto &ui = used[edges[idx].i];
    auto &uj = used[edges[idx].j];
    std::size_t c = 0;
    while ((c < ui.size() && ui[c]) || (c < uj.size() && uj[c]))
      ++c;
    for (auto *u : {&ui, &uj}) {
      if (u->size() <= c)
        u->resize(c + 1, false);
      (*u)[c] = true;
    }
    color[idx] = static_cast<int>(c);
  }
  return color;
}

// Misra-Gries: proper coloring with at most max_degree + 1 colors.
std::vector<int> misra_gries_colors(std::size_t n,
                                    const std::vector<Coupling> &edges,
                                    const std::vector<std::size_t> &order,
                                    std::size_t max_degree) {
  const int palette = static_cast<int>(max_degree) + 1;
  std::vector<std::vector<std::size_t>> nbrs(n);
  for (const auto &e : edges) {
    nbrs[e.i].push_back(e.j);
    nbrs[e.j].push_back(e.i);
  }
  ColorMatrix col(n, std::vector<int>(n, -1));
  // at[x][c] = the neighbor joined to x by the edge of color c, or -1
  std::vector<std::vector<long>> at(n, std::vector<long>(palette, -1));
  auto set_color = [&](std::size_t x, std::size_t y, int c) {
    if (int old = col[x][y]; old >= 0) {
      at[x][old] = -1;
      at[y][old] = -1;
    }
    col[x][y] = col[y][x] = c;
    if (c >= 0) {
      at[x][c] = static_cast<long>(y);
      at[y][c] = static_cast<long>(x);
    }
  };
  auto is_free = [&](std::size_t x, int c) { return at[x][c] < 0; };
  auto first_free = [&](std::size_t x) {
    int c = 0;
    while (!is_free(x, c))
      ++c;
    return c;
  };

  for (auto idx : order) {
    const std::size_t u = edges[idx].i;
    std::vector<std::size_t> fan{edges[idx].j};
    std::vector<bool> in_fan(n, false);
    in_fan[fan[0]] = true;
    for (bool grew = true; grew;) {
      grew = false;
      for (auto w : nbrs[u]) {
        if (!in_fan[w] && col[u][w] >= 0 && is_free(fan.back(), col[u][w])) {
          fan.push_back(w);
          in_fan[w] = true;
          grew = true;
          break;
        }
      }
    }

    const int c = first_free(u);
    const int d = first_free(fan.back());
    if (c != d) {
      // invert the path from u alternating d, c, d, ...
      std::vector<std::pair<std::size_t, std::size_t>> path;
      std::size_t x = u;
      int want = d;
      while (at[x][want] >= 0) {
        const auto y = static_cast<std::size_t>(at[x][want]);
        path.emplace_back(x, y);
        x = y;
        want = want == d ? c : d;
      }
      std::vector<int> old;
      for (auto [a, b] : path) {
        old.push_back(col[a][b]);
        set_color(a, b, -1);
      }
      for (std::size_t k = 0; k < path.size(); ++k)
        set_color(path[k].first, path[k].second, old[k] == c ? d : c);
    }

    std::size_t w = 0;
    while (w < fan.size()) {
      if (is_free(fan[w], d))
        break;
      ++w;
    }
    if (w == fan.size())
      throw std::logic_error("edge coloring: no fan vertex with a free color");
    for (std::size_t k = 0; k < w; ++k) {
      const int next = col[u][fan[k + 1]];
      set_color(u, fan[k + 1], -1);
      set_color(u, fan[k], next);
    }
    set_color(u, fan[w], d);
  }

  std::vector<int> color(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k)
    color[k] = col[edges[k].i][edges[k].j];
  return color;
}

} // namespace

std::vector<std::vector<Coupling>> coupling_rounds(const IsingModel &m) {
  const auto &couplings = m.couplings();
  const auto n = m.num_spins();
  std::vector<std::size_t> degree(n, 0);
  for (const auto &c : couplings) {
    ++degree[c.i];
    ++degree[c.j];
  }
  std::vector<std::size_t> order(couplings.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return degree[couplings[a].i] + degree[couplings[a].j] >
           degree[couplings[b].i] + degree[couplings[b].j];
  });
  const std::size_t max_degree =
      degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());

  auto color = greedy_colors(n, couplings, order);
  const int used = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  if (static_cast<std::size_t>(used) > max_degree + 1)
    color = misra_gries_colors(n, couplings, order, max_degree);

  std::vector<std::vector<Coupling>> rounds;
  for (auto idx : order) {
    const auto c = static_cast<std::size_t>(color[idx]);
    if (rounds.size() <= c)
      rounds.resize(c + 1);
    rounds[c].push_back(couplings[idx]);
  }
  std::erase_if(rounds, [](const auto &r) { return r.empty(); });
  return rounds;
}

void append_uniform_superposition(Circuit &c) {
  for (std::uint32_t q = 0; q < c.num_qubits(); ++q)
    c.add(Gate::h(q));
}

void append_phase_separator(Circuit &c, const IsingModel &m, double gamma,
                            Strategy strategy) {
  if (m.num_spins() != c.num_qubits())
    throw std::invalid_argument("model and circuit widths differ");
  const auto &h = m.fields();
  for (std::uint32_t q = 0; q < h.size(); ++q)
    if (h[q] != 0.0)
      c.add(Gate::rz(q, 2.0 * gamma * h[q]));

  auto emit = [&](const Coupling &k) {
    if (k.value != 0.0)
      c.add(Gate::rzz(static_cast<std::uint32_t>(k.i),
                      static_cast<std::uint32_t>(k.j), 2.0 * gamma * k.value));
  };
  if (strategy == Strategy::naive) {
    for (const auto &k : m.couplings())
      emit(k);
  } else {
    for (const auto &round : coupling_rounds(m))
      for (const auto &k : round)
        emit(k);
  }
}

void append_transverse_mixer(Circuit &c, double beta) {
  for (std::uint32_t q = 0; q < c.num_qubits(); ++q)
    c.add(Gate::rx(q, 2.0 * beta));
}

Circuit build_qaoa_ansatz(const IsingModel &m, std::size_t layers,
                          std::span<const double> gammas,
                          std::span<const double> betas, Strategy strategy) {
  if (layers < 1)
    throw std::invalid_argument("QAOA needs at least one layer");
  if (gammas.size() != layers || betas.size() != layers)
    throw std::invalid_argument(
        fmt::format("expected {} gammas and betas, got {} and {}", layers,
                    gammas.size(), betas.size()));
  Circuit c(m.num_spins());
  append_uniform_superposition(c);
  c.barrier();
  for (std::size_t k = 0; k < layers; ++k) {
    append_phase_separator(c, m, gammas[k], strategy);
    append_transverse_mixer(c, betas[k]);
    c.barrier();
  }
  return c;
}

Circuit decompose(const Circuit &c) {
  Circuit out(c.num_qubits());
  auto barrier = c.barriers().begin();
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (; barrier != c.barriers().end() && *barrier == k; ++barrier)
      out.barrier();
    const auto &g = c.gates()[k];
    if (g.kind == GateKind::RZZ) {
      out.add(Gate::cx(g.qubits[0], g.qubits[1]));
      out.add(Gate::rz(g.qubits[1], g.angle));
      out.add(Gate::cx(g.qubits[0], g.qubits[1]));
    } else {
      out.add(g);
    }
  }
  if (barrier != c.barriers().end())
    out.barrier();
  return out;
}

std::size_t depth(const Circuit &c) {
  std::vector<std::size_t> level(c.num_qubits(), 0);
  std::size_t result = 0;
  auto barrier = c.barriers().begin();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (barrier != c.barriers().end() && *barrier == k) {
      std::fill(level.begin(), level.end(), result);
      ++barrier;
    }
    const auto &g = c.gates()[k];
    std::size_t start = 0;
    for (auto q : g.targets())
      start = std::max(start, level[q]);
    for (auto q : g.targets())
      level[q] = start + 1;
    result = std::max(result, start + 1);
  }
  return result;
}

std::size_t GateCounts::total() const {
  return std::accumulate(by_kind.begin(), by_kind.end(), std::size_t{0});
}

GateCounts gate_counts(const Circuit &c) {
  GateCounts counts;
  for (const auto &g : c.gates())
    ++counts.by_kind[static_cast<std::size_t>(g.kind)];
  return counts;
}

std::string format_gate(const Gate &g) {
  std::string line(gate_name(g.kind));
  for (auto q : g.targets())
    line += fmt::format(" {}", q);
  if (gate_has_angle(g.kind))
    line += fmt::format(" {:.17g}", g.angle);
  return line;
}

std::string export_circuit_text(const Circuit &c) {
  std::string out;
  auto barrier = c.barriers().begin();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (barrier != c.barriers().end() && *barrier == k) {
      out += "BARRIER\n";
      ++barrier;
    }
    out += format_gate(c.gates()[k]);
    out += '\n';
  }
  if (barrier != c.barriers().end())
    out += "BARRIER\n";
  return out;
}

Circuit parse_circuit_text(std::string_view text, std::size_t num_qubits) {
  std::vector<Gate> gates;
  std::vector<std::size_t> barriers;
  std::size_t width = num_qubits;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && line[i] == ' ')
        ++i;
      auto j = line.find(' ', i);
      if (j == std::string_view::npos)
        j = line.size();
      if (j > i)
        tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty())
      continue;

    if (tokens.size() == 1 && tokens[0] == "BARRIER") {
      barriers.push_back(gates.size());
      continue;
    }
    auto fail = [&](const std::string &why) {
      return std::invalid_argument(fmt::format("line {}: {}", line_no, why));
    };
    Gate g;
    auto kind = std::find_if(kAllGateKinds.begin(), kAllGateKinds.end(),
                             [&](GateKind k) { return gate_name(k) == tokens[0]; });
    if (kind == kAllGateKinds.end())
      throw fail(fmt::format("unknown gate '{}'", tokens[0]));
    g.kind = *kind;
    const auto expected = 1 + g.arity() + (gate_has_angle(g.kind) ? 1 : 0);
    if (tokens.size() != expected)
      throw fail(fmt::format("{} takes {} fields", tokens[0], expected - 1));
    for (std::size_t k = 0; k < g.arity(); ++k) {
      const auto tok = tokens[1 + k];
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(),
                                     g.qubits[k]);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw fail(fmt::format("invalid qubit '{}'", tok));
      if (num_qubits == 0)
        width = std::max<std::size_t>(width, g.qubits[k] + 1);
    }
    if (gate_has_angle(g.kind)) {
      const auto tok = tokens.back();
      auto [p, ec] =
          std::from_chars(tok.data(), tok.data() + tok.size(), g.angle);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw fail(fmt::format("invalid angle '{}'", tok));
    }
    gates.push_back(g);
  }
  Circuit c(std::max<std::size_t>(width, 1));
  auto barrier = barriers.begin();
  for (std::size_t k = 0; k < gates.size(); ++k) {
    for (; barrier != barriers.end() && *barrier == k; ++barrier)
      c.barrier();
    c.add(gates[k]);
  }
  if (barrier != barriers.end())
    c.barrier();
  return c;
}

} // namespace qaoa
