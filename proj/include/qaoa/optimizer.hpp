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
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace qaoa {

using Objective = std::function<double(std::span<const double>)>;

/// Nelder-Mead settings. The budget counts objective evaluations.
struct OptimizerConfig {
  std::size_t max_evaluations = 5000;
  double xtol = 1e-6;         // max vertex distance (inf-norm) from the best
  double ftol = 1e-12;        // max spread of vertex values
  double initial_step = 0.1;  // per-coordinate offset of the initial simplex
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
};

struct TracePoint {
  std::size_t evaluation = 0; // 1-based
  double value = 0.0;         // best value so far
};

struct OptResult {
  std::vector<double> best_params;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
  std::vector<TracePoint> trace; // one point per improvement
};

/// Thrown when the objective returns NaN or infinity.
class OptimizerError : public std::runtime_error {
public:
  OptimizerError(const std::string &what, std::vector<double> point)
      : std::runtime_error(what), point_(std::move(point)) {}
  const std::vector<double> &point() const { return point_; }

private:
  std::vector<double> point_;
};

/// Nelder-Mead simplex search. Stops when the budget is spent or when the
/// simplex collapses (size <= xtol or value spread <= ftol). Requires
/// x0.size() >= 1 and max_evaluations >= x0.size() + 2.
OptResult minimize(const Objective &f, std::vector<double> x0,
                   const OptimizerConfig &config = {});

} // namespace qaoa
