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

#include "stosub/stochastic_model.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stosub {
namespace {

constexpr double kNormalizationTol = 1e-12;

std::string FormatSum(double sum) {
  std::ostringstream os;
  os.precision(12);
  os << sum;
  return os.str();
}

}  // namespace

int ItemModel::WorstCost() const {
  int worst = 0;
  for (std::size_t s = 0; s < probs.size(); ++s) {
    if (probs[s] > 0.0) worst = std::max(worst, costs[s]);
  }
  return worst;
}

std::vector<std::string> Validate(const Instance& instance) {
  std::vector<std::string> violations;
  if (instance.n < 0) violations.push_back("item count must be >= 0");
  if (instance.max_state < 1) violations.push_back("B must be >= 1");
  if (instance.budget < 1) violations.push_back("budget must be >= 1");
  if (static_cast<int>(instance.items.size()) != instance.n) {
    violations.push_back("expected " + std::to_string(instance.n) +
                         " items, found " +
                         std::to_string(instance.items.size()));
  }
  for (std::size_t i = 0; i < instance.items.size(); ++i) {
    const ItemModel& item = instance.items[i];
    const std::string where = " at item " + std::to_string(i + 1);
    if (static_cast<int>(item.probs.size()) != instance.max_state ||
        static_cast<int>(item.costs.size()) != instance.max_state) {
      violations.push_back("probs and costs must have B entries" + where);
      continue;
    }
    double sum = 0.0;
    bool negative = false;
    for (double p : item.probs) {
      if (!(p >= 0.0)) negative = true;
      sum += p;
    }
    if (negative) violations.push_back("negative probability" + where);
    if (std::abs(sum - 1.0) > kNormalizationTol) {
      violations.push_back("distribution sums to " + FormatSum(sum) + where);
    }
    for (std::size_t s = 0; s < item.costs.size(); ++s) {
      if (item.costs[s] < 1) {
        violations.push_back("cost of state " + std::to_string(s + 1) +
                             " must be >= 1" + where);
      }
      if (s > 0 && item.costs[s] < item.costs[s - 1]) {
        violations.push_back(
            "cost not nondecreasing in the state (better states must not be "
            "cheaper)" +
            where);
        break;
      }
    }
  }
  for (const std::string& problem : instance.outer.Validate(instance.n)) {
    violations.push_back("outer constraint: " + problem);
  }
  return violations;
}

void RequireValid(const Instance& instance) {
  const auto violations = Validate(instance);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw std::invalid_argument(msg);
}

int SampleState(const ItemModel& item, Rng& rng) {
  return SampleCategorical(item.probs, NextUnit(rng)) + 1;
}

Realization SampleRealization(const Instance& instance, Rng& rng) {
  Realization phi;
  phi.states.reserve(instance.items.size());
  for (const ItemModel& item : instance.items) {
    phi.states.push_back(SampleState(item, rng));
  }
  return phi;
}

Realization SampleRealization(const Instance& instance, std::uint64_t seed) {
  RequireValid(instance);
  Rng rng(seed);
  return SampleRealization(instance, rng);
}

double ExpectedTruncatedCost(const ItemModel& item, int t) {
  if (t < 0) throw std::invalid_argument("time must be >= 0");
  double total = 0.0;
  for (std::size_t s = 0; s < item.probs.size(); ++s) {
    total += item.probs[s] * std::min(item.costs[s], t);
  }
  return total;
}

StateVector Restrict(const Realization& phi, std::span<const int> items) {
  StateVector out(phi.states.size());
  for (int i : items) out[i] = phi.states[i];
  return out;
}

}  // namespace stosub
