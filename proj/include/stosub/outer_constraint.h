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

#ifndef STOSUB_OUTER_CONSTRAINT_H_
#define STOSUB_OUTER_CONSTRAINT_H_

#include <span>
#include <string>
#include <vector>

namespace stosub {

// Sorted, duplicate-free 0-based item indices.
using ItemSet = std::vector<int>;

struct LinearInequality {
  std::vector<double> coefficients;
  double bound = 0.0;
};

enum class OuterKind { kCardinality, kPartition, kExplicit };

// A downward-closed, state-independent family of feasible item sets.
//
// Cardinality and partition matroids come with an exact inequality
// description of their polytope. An explicit family is given by its maximal
// sets and is oracle-only; it also serves as the way to plug in a general
// matroid through its bases.
class OuterConstraint {
 public:
  static OuterConstraint Cardinality(int k);
  // Items not covered by any block are unconstrained.
  static OuterConstraint Partition(std::vector<std::vector<int>> blocks,
                                   std::vector<int> caps);
  static OuterConstraint Explicit(std::vector<std::vector<int>> maximal_sets);

  OuterKind kind() const { return kind_; }
  int k() const { return k_; }
  const std::vector<std::vector<int>>& blocks() const { return sets_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::vector<std::vector<int>>& maximal_sets() const { return sets_; }

  // Structural problems for an instance with n items; empty when well formed.
  std::vector<std::string> Validate(int n) const;

  bool IsIndependent(std::span<const int> items) const;

  bool HasCompactPolytope() const { return kind_ != OuterKind::kExplicit; }

  // Inequalities a.x <= b (a >= 0) that, with 0 <= x <= 1, describe
  // conv{1_S : S feasible} exactly. Throws RefusalError for explicit families.
  std::vector<LinearInequality> PolytopeInequalities(int n) const;

  // x in scale * P within 1e-9. Explicit families are decided by an LP over
  // their maximal sets for n <= 10; larger ones are refused.
  bool ContainsScaled(std::span<const double> x, double scale) const;

 private:
  OuterConstraint(OuterKind kind, int k, std::vector<std::vector<int>> sets,
                  std::vector<int> caps);

  OuterKind kind_;
  int k_ = 0;
  std::vector<std::vector<int>> sets_;  // partition blocks or maximal sets
  std::vector<int> caps_;
};

}  // namespace stosub

#endif  // STOSUB_OUTER_CONSTRAINT_H_
