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

#ifndef STOSUB_STOCHASTIC_MODEL_H_
#define STOSUB_STOCHASTIC_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stosub/lattice.h"
#include "stosub/outer_constraint.h"
#include "stosub/random.h"

namespace stosub {

// One item: a distribution over states 1..B and a positive integer cost per
// state. Vectors are indexed by state - 1.
struct ItemModel {
  std::vector<double> probs;
  std::vector<int> costs;

  double Prob(int state) const { return probs[state - 1]; }
  int Cost(int state) const { return costs[state - 1]; }
  // c_i(B): the cost in the top state, which bounds every other state.
  int TopCost() const { return costs.back(); }
  // Largest cost among states with positive probability.
  int WorstCost() const;
};

struct Instance {
  int n = 0;
  int max_state = 0;  // B
  int budget = 0;     // C
  std::vector<ItemModel> items;
  OuterConstraint outer = OuterConstraint::Cardinality(0);

  // Number of admissible start slots, |{1, ..., C - c_i(B)}|.
  int SlotCount(int item) const {
    return std::max(0, budget - items[item].TopCost());
  }
};

// States phi(i) in 1..B for every item.
struct Realization {
  std::vector<int> states;
};

// Every violated invariant, in a human-readable form. Empty iff the instance
// is well formed.
std::vector<std::string> Validate(const Instance& instance);

// Throws std::invalid_argument listing the violations, if any.
void RequireValid(const Instance& instance);

Realization SampleRealization(const Instance& instance, Rng& rng);
// Deterministic in `seed`. Rejects invalid instances.
Realization SampleRealization(const Instance& instance, std::uint64_t seed);

// Draws one state of `item` from its distribution.
int SampleState(const ItemModel& item, Rng& rng);

// E[min{c_i(phi(i)), t}] = sum_s p_i(s) * min{c_i(s), t}.
double ExpectedTruncatedCost(const ItemModel& item, int t);

// phi_S: phi on S, 0 elsewhere.
StateVector Restrict(const Realization& phi, std::span<const int> items);

}  // namespace stosub

#endif  // STOSUB_STOCHASTIC_MODEL_H_
