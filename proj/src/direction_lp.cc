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

#include "stosub/direction_lp.h"

#include <stdexcept>

namespace stosub {

std::string RowLabel::Name() const {
  switch (kind) {
    case RowKind::kItem:
      return "item[" + std::to_string(index + 1) + "]";
    case RowKind::kOuter:
      return "outer[" + std::to_string(index + 1) + "]";
    case RowKind::kBudget:
      return "budget[t=" + std::to_string(index) + "]";
  }
  return {};
}

LinearProgram TimeIndexedProgram::WithItemWeights(
    std::span<const double> weights) const {
  if (weights.size() != item_variables.size()) {
    throw std::invalid_argument("one weight per item is required");
  }
  LinearProgram out = lp;
  for (std::size_t i = 0; i < item_variables.size(); ++i) {
    for (int col : item_variables[i]) out.objective[col] = weights[i];
  }
  return out;
}

TimeIndexedProgram BuildTimeIndexedProgram(const Instance& instance) {
  const auto outer_rows = instance.outer.PolytopeInequalities(instance.n);

  TimeIndexedProgram program;
  program.item_variables.resize(instance.n);
  for (int i = 0; i < instance.n; ++i) {
    for (int t = 1; t <= instance.SlotCount(i); ++t) {
      program.item_variables[i].push_back(
          static_cast<int>(program.variables.size()));
      program.variables.push_back({i, t});
    }
  }
  const int columns = static_cast<int>(program.variables.size());
  LinearProgram& lp = program.lp;
  lp.num_variables = columns;
  lp.objective.assign(columns, 0.0);

  auto add = [&](RowLabel label, std::vector<double> row, double bound) {
    lp.AddRow(std::move(row), bound, label.Name());
    program.labels.push_back(label);
  };

  for (int i = 0; i < instance.n; ++i) {
    std::vector<double> row(columns, 0.0);
    for (int col : program.item_variables[i]) row[col] = 1.0;
    add({RowKind::kItem, i}, std::move(row), 1.0);
  }
  for (std::size_t r = 0; r < outer_rows.size(); ++r) {
    std::vector<double> row(columns, 0.0);
    for (int i = 0; i < instance.n; ++i) {
      for (int col : program.item_variables[i]) {
        row[col] = outer_rows[r].coefficients[i];
      }
    }
    add({RowKind::kOuter, static_cast<int>(r)}, std::move(row),
        outer_rows[r].bound);
  }
  for (int t = 1; t <= instance.budget; ++t) {
    std::vector<double> row(columns, 0.0);
    for (int i = 0; i < instance.n; ++i) {
      const double coefficient = ExpectedTruncatedCost(instance.items[i], t);
      const auto& cols = program.item_variables[i];
      for (int s = 1; s <= std::min<int>(t, cols.size()); ++s) {
        row[cols[s - 1]] = coefficient;
      }
    }
    add({RowKind::kBudget, t}, std::move(row), 2.0 * t);
  }
  return program;
}

}  // namespace stosub
