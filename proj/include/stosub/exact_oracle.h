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

#ifndef STOSUB_EXACT_ORACLE_H_
#define STOSUB_EXACT_ORACLE_H_

#include <vector>

#include "json.hpp"
#include "stosub/lattice.h"
#include "stosub/stochastic_model.h"

namespace stosub {

inline constexpr int kOracleMaxItems = 5;
inline constexpr int kOracleMaxStates = 3;

// A deterministic adaptive policy as a decision tree. `item < 0` means stop;
// otherwise the item is selected and `children[s - 1]` continues after state
// s is observed (children of zero-probability states may be stops).
struct PolicyTree {
  int item = -1;
  std::vector<PolicyTree> children;

  static PolicyTree Stop() { return {}; }
  bool IsStop() const { return item < 0; }
};

struct OptimalPolicy {
  double value = 0.0;
  int first_action = -1;  // item selected first, -1 to stop immediately
  PolicyTree tree;
};

// Best feasible adaptive policy by memoized recursion over (observed states
// of selected items). An item is admissible when adding it keeps the set
// outer-independent and its worst positive-probability cost fits the
// remaining budget. Stopping is always admissible. Throws RefusalError beyond
// n <= 5, B <= 3.
OptimalPolicy OptimalAdaptiveValue(const Instance& instance,
                                   const UtilityOracle& f);

// Expected final utility of `tree` by enumerating realization branches.
double EvaluatePolicyExact(const Instance& instance, const UtilityOracle& f,
                           const PolicyTree& tree);

// Whether every branch of `tree` obeys both constraints for all realizations.
bool IsFeasiblePolicy(const Instance& instance, const PolicyTree& tree);

// {"stop":true} or {"item":i,"children":{"s":subtree,...}} with 1-based items.
nlohmann::json PolicyTreeToJson(const PolicyTree& tree);

}  // namespace stosub

#endif  // STOSUB_EXACT_ORACLE_H_
