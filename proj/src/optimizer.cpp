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

#include "qaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace qaoa {

namespace {

struct BudgetExhausted {};

class CountingObjective {
public:
  CountingObjective(const Objective &f, std::size_t budget, OptResult &result)
      : f_(f), budget_(budget), result_(result) {}

  double operator()(const std::vector<double> &x) {
    if (result_.evaluations >= budget_)
      throw BudgetExhausted{};
    const double value = f_(x);
    ++result_.evaluations;
    if (!std::isfinite(value))
      throw OptimizerError(
          fmt::format("objective returned {} at [{}]", value,
                      fmt::join(x, ", ")),
          x);
    if (result_.best_params.empty() || value < result_.best_value) {
      result_.best_value = value;
      result_.best_params = x;
      result_.trace.push_back({result_.evaluations, value});
    }
    return value;
  }

private:
  const Objective &f_;
  std::size_t budget_;
  OptResult &result_;
};

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

} // namespace

OptResult minimize(const Objective &f, std::vector<double> x0,
                   const OptimizerConfig &config) {
  const std::size_t dim = x0.size();
  if (dim < 1)
    throw std::invalid_argument("optimizer needs at least one parameter");
  if (config.max_evaluations < dim + 2)
    throw std::invalid_argument(
        fmt::format("budget {} below the minimum {} for {} parameters",
                    config.max_evaluations, dim + 2, dim));

  OptResult result;
  CountingObjective eval(f, config.max_evaluations, result);

  auto along = [](const std::vector<double> &from, const std::vector<double> &to,
                  double t) {
    // from + t * (to - from)
    std::vector<double> out(from.size());
    for (std::size_t i = 0; i < from.size(); ++i)
      out[i] = from[i] + t * (to[i] - from[i]);
    return out;
  };

  try {
    std::vector<Vertex> simplex;
    simplex.reserve(dim + 1);
    simplex.push_back({x0, eval(x0)});
    for (std::size_t i = 0; i < dim; ++i) {
      auto x = x0;
      x[i] += config.initial_step;
      simplex.push_back({x, eval(x)});
    }

    for (;;) {
      std::stable_sort(simplex.begin(), simplex.end(),
                       [](const Vertex &a, const Vertex &b) { return a.f < b.f; });
      const auto &best = simplex.front();
      auto &worst = simplex.back();

      double size = 0.0;
      for (std::size_t v = 1; v <= dim; ++v)
        for (std::size_t i = 0; i < dim; ++i)
          size = std::max(size, std::abs(simplex[v].x[i] - best.x[i]));
      if (size <= config.xtol || worst.f - best.f <= config.ftol) {
        result.converged = true;
        break;
      }

      std::vector<double> centroid(dim, 0.0);
      for (std::size_t v = 0; v < dim; ++v)
        for (std::size_t i = 0; i < dim; ++i)
          centroid[i] += simplex[v].x[i] / static_cast<double>(dim);

      const auto reflected = along(centroid, worst.x, -config.reflection);
      const double fr = eval(reflected);

      if (fr < best.f) {
        auto expanded = along(centroid, reflected, config.expansion);
        const double fe = eval(expanded);
        if (fe < fr)
          worst = {std::move(expanded), fe};
        else
          worst = {reflected, fr};
        continue;
      }
      if (fr < simplex[dim - 1].f) {
        worst = {reflected, fr};
        continue;
      }

      if (fr < worst.f) {
        auto outside = along(centroid, reflected, config.contraction);
        const double fc = eval(outside);
        if (fc <= fr) {
          worst = {std::move(outside), fc};
          continue;
        }
      } else {
        auto inside = along(centroid, worst.x, config.contraction);
        const double fc = eval(inside);
        if (fc < worst.f) {
          worst = {std::move(inside), fc};
          continue;
        }
      }

      for (std::size_t v = 1; v <= dim; ++v) {
        simplex[v].x = along(simplex[0].x, simplex[v].x, config.shrink);
        simplex[v].f = eval(simplex[v].x);
      }
    }
  } catch (const BudgetExhausted &) {
    result.converged = false;
  }
  return result;
}

} // namespace qaoa
