// Copyright 2026 The Authors.
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

#ifndef STOSUB_CONTINUOUS_GREEDY_H_
#define STOSUB_CONTINUOUS_GREEDY_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "stosub/lattice.h"
#include "stosub/stochastic_model.h"

namespace stosub {

struct SolutionMeta {
  double stopping_time = 0.0;  // l
  int steps = 0;               // T, with step size l / T
  std::int64_t gradient_samples = 0;
  std::uint64_t seed = 0;
};

// Fractional solution x(i, t) of the time-indexed relaxation.
struct TimeIndexedSolution {
  // x[i][t - 1] for t in 1..SlotCount(i).
  std::vector<std::vector<double>> x;
  // xbar(i) = sum_t x(i, t).
  std::vector<double> marginals;
  SolutionMeta meta;

  static TimeIndexedSolution Zero(const Instance& instance);

  double Value(int item, int slot) const { return x[item][slot - 1]; }
  void RecomputeMarginals();
};

struct GradientEstimate {
  std::vector<double> weights;
  std::vector<double> standard_errors;
};

// w(i) ~ E[f(Phi_{R + i}) - f(Phi_{R - i})], R drawn from the marginals.
// Items without start slots get weight 0.
GradientEstimate EstimateGradient(const Instance& instance,
                                  const UtilityOracle& f,
                                  std::span<const double> marginals,
                                  std::int64_t samples, std::uint64_t seed,
                                  int workers = 1);

struct GreedyOptions {
  double stopping_time = 0.25;
  int steps = 50;
  std::int64_t gradient_samples = 10'000;
  std::uint64_t seed = 1;
  int workers = 1;
  // Called after every step with the step number (1-based).
  std::function<void(int, const TimeIndexedSolution&)> on_step;
};

// Stochastic continuous greedy: T steps of size l / T, each moving along the
// LP direction that maximizes the estimated gradient over the unscaled rows.
TimeIndexedSolution RunContinuousGreedy(const Instance& instance,
                                        const UtilityOracle& f,
                                        const GreedyOptions& options);

struct RowCheck {
  std::string name;
  double lhs = 0.0;
  double bound = 0.0;
  bool ok = true;

  double margin() const { return bound - lhs; }
};

struct CertificationReport {
  bool ok = true;
  double scale = 0.0;
  std::vector<RowCheck> rows;
  std::vector<std::string> issues;
};

inline constexpr double kCertificationTol = 1e-7;

// Checks the solution invariants and that the outer rows hold at scale * b and
// the budget rows at scale * 2t, within kCertificationTol.
CertificationReport Certify(const Instance& instance,
                            const TimeIndexedSolution& solution, double scale);

}  // namespace stosub

#endif  // STOSUB_CONTINUOUS_GREEDY_H_
