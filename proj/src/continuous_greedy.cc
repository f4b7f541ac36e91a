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

#include "stosub/continuous_greedy.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stosub/direction_lp.h"
#include "stosub/extension.h"
#include "stosub/monte_carlo.h"

namespace stosub {
namespace {

constexpr double kClampSlack = 1e-9;

struct GradientAccumulator {
  std::vector<RunningStats> per_item;

  void Merge(const GradientAccumulator& other) {
    for (std::size_t i = 0; i < per_item.size(); ++i) {
      per_item[i].Merge(other.per_item[i]);
    }
  }
};

}  // namespace

TimeIndexedSolution TimeIndexedSolution::Zero(const Instance& instance) {
  TimeIndexedSolution sol;
  sol.x.resize(instance.n);
  for (int i = 0; i < instance.n; ++i) {
    sol.x[i].assign(instance.SlotCount(i), 0.0);
  }
  sol.marginals.assign(instance.n, 0.0);
  return sol;
}

void TimeIndexedSolution::RecomputeMarginals() {
  marginals.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double sum = 0.0;
    for (double v : x[i]) sum += v;
    marginals[i] = sum;
  }
}

GradientEstimate EstimateGradient(const Instance& instance,
                                  const UtilityOracle& f,
                                  std::span<const double> marginals,
                                  std::int64_t samples, std::uint64_t seed,
                                  int workers) {
  RequireMarginals(instance, marginals);
  if (samples < 2) throw std::invalid_argument("sample count must be >= 2");
  const int n = instance.n;
  GradientAccumulator zero{std::vector<RunningStats>(n)};
  const GradientAccumulator acc = RunBlocked(
      samples, workers, seed, "gradient", zero,
      [&](Rng& rng, std::int64_t, GradientAccumulator& out) {
        StateVector u(static_cast<std::size_t>(n));
        std::vector<int> phi(n);
        for (int i = 0; i < n; ++i) {
          const bool in_set = NextUnit(rng) < marginals[i];
          phi[i] = SampleState(instance.items[i], rng);
          if (in_set) u[i] = phi[i];
        }
        for (int i = 0; i < n; ++i) {
          if (instance.SlotCount(i) == 0) continue;
          const int saved = u[i];
          u[i] = phi[i];
          const double with = f(u);
          u[i] = 0;
          const double without = f(u);
          u[i] = saved;
          out.per_item[i].Add(with - without);
        }
      });
  GradientEstimate estimate;
  estimate.weights.assign(n, 0.0);
  estimate.standard_errors.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    estimate.weights[i] = acc.per_item[i].Mean();
    estimate.standard_errors[i] = acc.per_item[i].StandardError();
  }
  return estimate;
}

TimeIndexedSolution RunContinuousGreedy(const Instance& instance,
                                        const UtilityOracle& f,
                                        const GreedyOptions& options) {
  RequireValid(instance);
  if (!(options.stopping_time > 0.0 && options.stopping_time <= 1.0)) {
    throw std::invalid_argument("stopping time must lie in (0, 1]");
  }
  if (options.steps < 1) throw std::invalid_argument("steps must be >= 1");

  const TimeIndexedProgram program = BuildTimeIndexedProgram(instance);
  const double step_size = options.stopping_time / options.steps;

  TimeIndexedSolution sol = TimeIndexedSolution::Zero(instance);
  sol.meta = {options.stopping_time, options.steps, options.gradient_samples,
              options.seed};

  for (int step = 1; step <= options.steps; ++step) {
    const GradientEstimate gradient = EstimateGradient(
        instance, f, sol.marginals, options.gradient_samples,
        DeriveSeed(options.seed, "greedy-step", step), options.workers);
    const LpSolution direction =
        SolveLp(program.WithItemWeights(gradient.weights));
    for (std::size_t col = 0; col < program.variables.size(); ++col) {
      const SlotVariable& var = program.variables[col];
      sol.x[var.item][var.slot - 1] += step_size * direction.values[col];
    }
    sol.RecomputeMarginals();
    for (int i = 0; i < instance.n; ++i) {
      if (sol.marginals[i] > 1.0 && sol.marginals[i] <= 1.0 + kClampSlack) {
        for (double& v : sol.x[i]) v /= sol.marginals[i];
      }
    }
    sol.RecomputeMarginals();
    if (options.on_step) options.on_step(step, sol);
  }
  return sol;
}

CertificationReport Certify(const Instance& instance,
                            const TimeIndexedSolution& solution,
                            double scale) {
  CertificationReport report;
  report.scale = scale;
  auto issue = [&](std::string text) {
    report.ok = false;
    report.issues.push_back(std::move(text));
  };

  if (static_cast<int>(solution.x.size()) != instance.n ||
      static_cast<int>(solution.marginals.size()) != instance.n) {
    issue("solution does not have one entry per item");
    return report;
  }
  for (int i = 0; i < instance.n; ++i) {
    const std::string item = "item " + std::to_string(i + 1);
    if (static_cast<int>(solution.x[i].size()) != instance.SlotCount(i)) {
      issue(item + " has values outside slots 1.." +
            std::to_string(instance.SlotCount(i)));
      continue;
    }
    double sum = 0.0;
    for (std::size_t t = 0; t < solution.x[i].size(); ++t) {
      const double v = solution.x[i][t];
      if (!(v >= -kCertificationTol && v <= 1.0 + kCertificationTol)) {
        issue(item + " slot " + std::to_string(t + 1) + " value " +
              std::to_string(v) + " outside [0,1]");
      }
      sum += v;
    }
    if (std::abs(sum - solution.marginals[i]) > 1e-9) {
      issue(item + " marginal does not equal the sum of its slots");
    }
    if (solution.marginals[i] > 1.0 + kCertificationTol) {
      issue(item + " marginal exceeds 1");
    }
  }
  if (!report.ok) return report;

  auto check = [&](std::string name, double lhs, double bound) {
    RowCheck row{std::move(name), lhs, bound, lhs <= bound + kCertificationTol};
    if (!row.ok) {
      std::ostringstream msg;
      msg << row.name << " violated: " << lhs << " > " << bound;
      issue(msg.str());
    }
    report.rows.push_back(std::move(row));
  };

  if (instance.outer.HasCompactPolytope()) {
    const auto rows = instance.outer.PolytopeInequalities(instance.n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      double lhs = 0.0;
      for (int i = 0; i < instance.n; ++i) {
        lhs += rows[r].coefficients[i] * solution.marginals[i];
      }
      check(RowLabel{RowKind::kOuter, static_cast<int>(r)}.Name(), lhs,
            scale * rows[r].bound);
    }
  } else if (!instance.outer.ContainsScaled(solution.marginals, scale)) {
    issue("marginals are not in scale * P for the explicit outer family");
  }

  for (int t = 1; t <= instance.budget; ++t) {
    double lhs = 0.0;
    for (int i = 0; i < instance.n; ++i) {
      double prefix = 0.0;
      const int upto = std::min<int>(t, solution.x[i].size());
      for (int s = 0; s < upto; ++s) prefix += solution.x[i][s];
      lhs += ExpectedTruncatedCost(instance.items[i], t) * prefix;
    }
    check(RowLabel{RowKind::kBudget, t}.Name(), lhs, scale * 2.0 * t);
  }
  return report;
}

}  // namespace stosub
