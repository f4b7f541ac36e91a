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

#include "stosub/outer_constraint.h"

#include <algorithm>
#include <set>

#include "stosub/errors.h"
#include "stosub/linear_program.h"

namespace stosub {
namespace {

constexpr double kMembershipTol = 1e-9;
constexpr int kExplicitHullLimit = 10;

std::vector<int> Sorted(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

}  // namespace

OuterConstraint::OuterConstraint(OuterKind kind, int k,
                                 std::vector<std::vector<int>> sets,
                                 std::vector<int> caps)
    : kind_(kind), k_(k), sets_(std::move(sets)), caps_(std::move(caps)) {}

OuterConstraint OuterConstraint::Cardinality(int k) {
  return OuterConstraint(OuterKind::kCardinality, k, {}, {});
}

OuterConstraint OuterConstraint::Partition(std::vector<std::vector<int>> blocks,
                                           std::vector<int> caps) {
  return OuterConstraint(OuterKind::kPartition, 0, std::move(blocks),
                         std::move(caps));
}

OuterConstraint OuterConstraint::Explicit(
    std::vector<std::vector<int>> maximal_sets) {
  for (auto& set : maximal_sets) set = Sorted(std::move(set));
  return OuterConstraint(OuterKind::kExplicit, 0, std::move(maximal_sets), {});
}

std::vector<std::string> OuterConstraint::Validate(int n) const {
  std::vector<std::string> problems;
  auto check_ids = [&](const std::vector<int>& set, const std::string& what) {
    for (int i : set) {
      if (i < 0 || i >= n) {
        problems.push_back(what + " refers to item " + std::to_string(i + 1) +
                           " outside 1.." + std::to_string(n));
      }
    }
  };
  switch (kind_) {
    case OuterKind::kCardinality:
      if (k_ < 0) problems.push_back("cardinality bound k must be >= 0");
      break;
    case OuterKind::kPartition: {
      if (sets_.size() != caps_.size()) {
        problems.push_back("partition needs one capacity per block");
      }
      std::set<int> seen;
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        check_ids(sets_[b], "partition block " + std::to_string(b + 1));
        for (int i : sets_[b]) {
          if (!seen.insert(i).second) {
            problems.push_back("item " + std::to_string(i + 1) +
                               " appears in more than one partition block");
          }
        }
      }
      for (int cap : caps_) {
        if (cap < 0) problems.push_back("partition capacities must be >= 0");
      }
      break;
    }
    case OuterKind::kExplicit:
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        check_ids(sets_[s], "maximal set " + std::to_string(s + 1));
      }
      break;
  }
  return problems;
}

bool OuterConstraint::IsIndependent(std::span<const int> items) const {
  switch (kind_) {
    case OuterKind::kCardinality:
      return static_cast<int>(items.size()) <= k_;
    case OuterKind::kPartition:
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        const auto& block = sets_[b];
        const auto used = std::count_if(items.begin(), items.end(), [&](int i) {
          return std::find(block.begin(), block.end(), i) != block.end();
        });
        if (used > caps_[b]) return false;
      }
      return true;
    case OuterKind::kExplicit: {
      const std::vector<int> sorted = Sorted({items.begin(), items.end()});
      if (sorted.empty()) return true;
      return std::any_of(sets_.begin(), sets_.end(), [&](const auto& maximal) {
        return std::includes(maximal.begin(), maximal.end(), sorted.begin(),
                             sorted.end());
      });
    }
  }
  return false;
}

std::vector<LinearInequality> OuterConstraint::PolytopeInequalities(
    int n) const {
  std::vector<LinearInequality> rows;
  switch (kind_) {
    case OuterKind::kCardinality:
      rows.push_back({std::vector<double>(n, 1.0), static_cast<double>(k_)});
      break;
    case OuterKind::kPartition:
      for (std::size_t b = 0; b < sets_.size(); ++b) {
        LinearInequality row{std::vector<double>(n, 0.0),
                             static_cast<double>(caps_[b])};
        for (int i : sets_[b]) row.coefficients[i] = 1.0;
        rows.push_back(std::move(row));
      }
      break;
    case OuterKind::kExplicit:
      throw RefusalError(
          "explicit outer family has no compact polytope description");
  }
  return rows;
}

bool OuterConstraint::ContainsScaled(std::span<const double> x,
                                     double scale) const {
  const int n = static_cast<int>(x.size());
  if (scale <= 0.0) {
    return std::all_of(x.begin(), x.end(),
                       [](double v) { return v <= kMembershipTol; });
  }
  if (kind_ != OuterKind::kExplicit) {
    for (const LinearInequality& row : PolytopeInequalities(n)) {
      double lhs = 0.0;
      for (int i = 0; i < n; ++i) lhs += row.coefficients[i] * x[i];
      if (lhs > scale * row.bound + kMembershipTol) return false;
    }
    return true;
  }

  if (n > kExplicitHullLimit) {
    throw RefusalError("explicit-family membership is limited to n <= " +
                       std::to_string(kExplicitHullLimit) + " items");
  }
  // For a downward-closed family, z = x / scale lies in the hull iff
  //   max { z.w : w(S) <= 1 for every maximal S, w >= 0 } <= 1
  // (LP duality against the fractional cover of z by maximal sets).
  std::vector<char> coverable(n, 0);
  for (const auto& set : sets_) {
    for (int i : set) coverable[i] = 1;
  }
  LinearProgram lp;
  lp.num_variables = n;
  lp.objective.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double z = x[i] / scale;
    if (!coverable[i]) {
      if (z > kMembershipTol) return false;
      continue;
    }
    lp.objective[i] = z;
  }
  for (const auto& set : sets_) {
    std::vector<double> row(n, 0.0);
    for (int i : set) row[i] = 1.0;
    lp.AddRow(std::move(row), 1.0);
  }
  return SolveLp(lp).objective <= 1.0 + kMembershipTol;
}

}  // namespace stosub
