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

#ifndef STOSUB_DIRECTION_LP_H_
#define STOSUB_DIRECTION_LP_H_

#include <span>
#include <string>
#include <vector>

#include "stosub/linear_program.h"
#include "stosub/stochastic_model.h"

namespace stosub {

// Variable x(i, t): item i started in slot t, t in 1..C - c_i(B).
struct SlotVariable {
  int item = 0;
  int slot = 0;
};

enum class RowKind {
  kItem,    // sum_t x(i,t) <= 1
  kOuter,   // a . xbar <= b, one per outer inequality
  kBudget,  // sum_i E[min{c_i, t}] sum_{t' <= t} x(i,t') <= 2t, one per t
};

struct RowLabel {
  RowKind kind = RowKind::kItem;
  int index = 0;  // item, outer inequality, or time t (1-based)

  std::string Name() const;
};

// The feasible region of the time-indexed relaxation, materialized densely.
struct TimeIndexedProgram {
  std::vector<SlotVariable> variables;
  // item_variables[i][t - 1] is the column of x(i, t).
  std::vector<std::vector<int>> item_variables;
  std::vector<RowLabel> labels;
  LinearProgram lp;  // objective left at zero

  // Copy of `lp` whose objective puts weight w(i) on every slot of item i.
  LinearProgram WithItemWeights(std::span<const double> weights) const;
};

// Throws RefusalError if the outer constraint has no compact polytope.
TimeIndexedProgram BuildTimeIndexedProgram(const Instance& instance);

}  // namespace stosub

#endif  // STOSUB_DIRECTION_LP_H_
