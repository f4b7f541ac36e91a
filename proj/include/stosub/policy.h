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

#ifndef STOSUB_POLICY_H_
#define STOSUB_POLICY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stosub/continuous_greedy.h"
#include "stosub/crs.h"
#include "stosub/lattice.h"
#include "stosub/stochastic_model.h"

namespace stosub {

// Hands out item states one at a time and logs every read, so a trace can
// prove that no state was observed before its item was selected.
class RevealingOracle {
 public:
  explicit RevealingOracle(const Realization& phi) : phi_(phi) {}

  int Reveal(int item) {
    log_.push_back(item);
    return phi_.states[item];
  }
  const std::vector<int>& log() const { return log_; }

 private:
  const Realization& phi_;
  std::vector<int> log_;
};

struct PolicyStep {
  int item = 0;
  int start_time = 0;
  bool gate_passed = false;
  int accumulated_before = 0;  // C' when the item was visited
  int realized_state = 0;      // 0 if the item was skipped
  int realized_cost = 0;       // 0 if the item was skipped
};

struct PolicyTrace {
  ItemSet sampled;
  ItemSet kept;
  // Kept items in visiting order and their start slots.
  std::vector<int> sequence;
  std::vector<int> start_times;
  std::vector<PolicyStep> steps;
  // C' after each visited item.
  std::vector<int> accumulated_cost;
  ItemSet selected;
  std::vector<int> reveal_log;
  int total_cost = 0;
  double utility = 0.0;
  // Selection vector: phi on the selected items, 0 elsewhere.
  StateVector selection;
};

// The inner/outer constrained adaptive policy built from a certified
// fractional solution: sample R, prune it with the scheme, draw start slots,
// then visit items by start slot (least index first on ties) and select an item
// iff the realized cost so far does not exceed its start slot.
class InnerOuterPolicy {
 public:
  // Rejects solutions that do not certify at scale min(beta, 1/4).
  InnerOuterPolicy(Instance instance, UtilityOracle f, BalancedCrs crs,
                   TimeIndexedSolution solution);

  const Instance& instance() const { return instance_; }
  const UtilityOracle& utility() const { return f_; }
  const BalancedCrs& crs() const { return crs_; }
  const TimeIndexedSolution& solution() const { return solution_; }
  double stopping_time() const { return stopping_time_; }

  // R: each item independently with probability ybar(i).
  ItemSet SampleSet(std::uint64_t seed) const;

  PolicyTrace Execute(const Realization& phi, std::uint64_t seed) const;

  // Execute with R already drawn; pruning and start slots use `seed`.
  PolicyTrace ExecuteFrom(const ItemSet& sampled, const Realization& phi,
                          std::uint64_t seed) const;

 private:
  Instance instance_;
  UtilityOracle f_;
  BalancedCrs crs_;
  TimeIndexedSolution solution_;
  double stopping_time_;
};

struct FavgEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::int64_t runs = 0;
  std::int64_t inner_violations = 0;
  std::int64_t outer_violations = 0;
  std::int64_t adaptivity_violations = 0;
};

// Mean utility over independent (policy randomness, realization) pairs, with
// every trace checked against both constraints and the adaptivity boundary.
FavgEstimate EstimateFavg(const InnerOuterPolicy& policy, std::int64_t runs,
                          std::uint64_t seed, int workers = 1);

struct DominanceReport {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  double mean_policy_utility = 0.0;
  double mean_psi_c_utility = 0.0;
  // JSON line describing the first violating trial, if any.
  std::optional<std::string> first_violation;
};

// Per coupled sample (shared R, realization, pruning and start slots),
// checks the policy's selection vector dominates psi_c(v) coordinatewise and
// in utility.
DominanceReport CoupledDominanceTest(const InnerOuterPolicy& policy,
                                     std::int64_t trials, std::uint64_t seed,
                                     int workers = 1);

// One trace as a single JSON line (items 1-based).
std::string TraceToJsonLine(const PolicyTrace& trace);

}  // namespace stosub

#endif  // STOSUB_POLICY_H_
