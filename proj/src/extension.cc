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

#include "stosub/extension.h"

#include <stdexcept>
#include <vector>

#include "stosub/errors.h"

namespace stosub {
namespace {

std::int64_t Power(std::int64_t base, int exp, std::int64_t cap) {
  std::int64_t result = 1;
  for (int k = 0; k < exp; ++k) {
    result *= base;
    if (result > cap) return cap + 1;
  }
  return result;
}

void RequireSamples(std::int64_t samples) {
  if (samples < 2) throw std::invalid_argument("sample count must be >= 2");
}

// Sum over joint states of `set` (others fixed at 0) of prob * f.
double ExpectOverStates(const Instance& instance, const UtilityOracle& f,
                        std::span<const int> set) {
  StateVector u(static_cast<std::size_t>(instance.n));
  const int k = static_cast<int>(set.size());
  double total = 0.0;
  std::vector<int> state(k, 1);
  for (;;) {
    double prob = 1.0;
    for (int a = 0; a < k; ++a) {
      u[set[a]] = state[a];
      prob *= instance.items[set[a]].Prob(state[a]);
    }
    if (prob > 0.0) total += prob * f(u);
    int a = k - 1;
    while (a >= 0 && state[a] == instance.max_state) state[a--] = 1;
    if (a < 0) break;
    ++state[a];
  }
  return total;
}

}  // namespace

void RequireMarginals(const Instance& instance,
                      std::span<const double> marginals) {
  if (static_cast<int>(marginals.size()) != instance.n) {
    throw std::invalid_argument("marginal vector length must equal n");
  }
  for (double x : marginals) {
    if (!(x >= 0.0 && x <= 1.0)) {
      throw std::invalid_argument("marginals must lie in [0,1]");
    }
  }
}

double FbarExact(const Instance& instance, const UtilityOracle& f,
                 std::span<const int> set) {
  const int k = static_cast<int>(set.size());
  if (Power(instance.max_state, k, kSetEnumerationLimit) >
      kSetEnumerationLimit) {
    throw RefusalError("B^|S| exceeds the enumeration limit for fbar");
  }
  return ExpectOverStates(instance, f, set);
}

Estimate FbarMonteCarlo(const Instance& instance, const UtilityOracle& f,
                        std::span<const int> set, std::int64_t samples,
                        std::uint64_t seed, int workers) {
  RequireSamples(samples);
  const std::vector<int> items(set.begin(), set.end());
  const RunningStats stats = RunBlocked(
      samples, workers, seed, "fbar", RunningStats{},
      [&](Rng& rng, std::int64_t, RunningStats& acc) {
        StateVector u(static_cast<std::size_t>(instance.n));
        for (int i : items) u[i] = SampleState(instance.items[i], rng);
        acc.Add(f(u));
      });
  return ToEstimate(stats);
}

double MultilinearExact(const Instance& instance, const UtilityOracle& f,
                        std::span<const double> marginals) {
  RequireMarginals(instance, marginals);
  const int n = instance.n;
  if (n > kExtensionMaxItems ||
      Power(instance.max_state, n, kExtensionMaxJointStates) >
          kExtensionMaxJointStates) {
    throw RefusalError(
        "multilinear extension enumeration needs n <= 10 and B^n <= 10^4");
  }
  double total = 0.0;
  std::vector<int> set;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    double weight = 1.0;
    set.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        weight *= marginals[i];
        set.push_back(i);
      } else {
        weight *= 1.0 - marginals[i];
      }
    }
    if (weight == 0.0) continue;
    total += weight * ExpectOverStates(instance, f, set);
  }
  return total;
}

Estimate MultilinearMonteCarlo(const Instance& instance, const UtilityOracle& f,
                               std::span<const double> marginals,
                               std::int64_t samples, std::uint64_t seed,
                               int workers) {
  RequireMarginals(instance, marginals);
  RequireSamples(samples);
  const RunningStats stats = RunBlocked(
      samples, workers, seed, "multilinear", RunningStats{},
      [&](Rng& rng, std::int64_t, RunningStats& acc) {
        StateVector u(static_cast<std::size_t>(instance.n));
        for (int i = 0; i < instance.n; ++i) {
          const bool in_set = NextUnit(rng) < marginals[i];
          const int state = SampleState(instance.items[i], rng);
          if (in_set) u[i] = state;
        }
        acc.Add(f(u));
      });
  return ToEstimate(stats);
}

}  // namespace stosub
