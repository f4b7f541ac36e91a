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

#include "stosub/policy.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "stosub/monte_carlo.h"

namespace stosub {
namespace {

constexpr std::string_view kSampleSeedLabel = "sample";

std::vector<int> OneBased(const std::vector<int>& items) {
  std::vector<int> out(items);
  for (int& i : out) ++i;
  return out;
}

nlohmann::json TraceToJson(const PolicyTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const PolicyStep& s : trace.steps) {
    steps.push_back({{"item", s.item + 1},
                     {"start", s.start_time},
                     {"gate", s.gate_passed},
                     {"accumulated_before", s.accumulated_before},
                     {"state", s.realized_state},
                     {"cost", s.realized_cost}});
  }
  return {{"sampled", OneBased(trace.sampled)},
          {"kept", OneBased(trace.kept)},
          {"sequence", OneBased(trace.sequence)},
          {"start_times", trace.start_times},
          {"steps", steps},
          {"accumulated_cost", trace.accumulated_cost},
          {"selected", OneBased(trace.selected)},
          {"revealed", OneBased(trace.reveal_log)},
          {"total_cost", trace.total_cost},
          {"utility", trace.utility}};
}

}  // namespace

InnerOuterPolicy::InnerOuterPolicy(Instance instance, UtilityOracle f,
                                   BalancedCrs crs,
                                   TimeIndexedSolution solution)
    : instance_(std::move(instance)),
      f_(std::move(f)),
      crs_(crs),
      solution_(std::move(solution)),
      stopping_time_(std::min(crs_.beta, 0.25)) {
  RequireValid(instance_);
  const CertificationReport report =
      Certify(instance_, solution_, stopping_time_);
  if (!report.ok) {
    std::string msg = "solution is not certified at scale " +
                      std::to_string(stopping_time_) + ":";
    for (const auto& issue : report.issues) msg += "\n  " + issue;
    throw std::invalid_argument(msg);
  }
}

ItemSet InnerOuterPolicy::SampleSet(std::uint64_t seed) const {
  const std::uint64_t sample_seed = DeriveSeed(seed, kSampleSeedLabel);
  ItemSet set;
  for (int i = 0; i < instance_.n; ++i) {
    if (HashUniform(sample_seed, static_cast<std::uint64_t>(i)) <
        solution_.marginals[i]) {
      set.push_back(i);
    }
  }
  return set;
}

PolicyTrace InnerOuterPolicy::Execute(const Realization& phi,
                                      std::uint64_t seed) const {
  return ExecuteFrom(SampleSet(seed), phi, seed);
}

PolicyTrace InnerOuterPolicy::ExecuteFrom(const ItemSet& sampled,
                                          const Realization& phi,
                                          std::uint64_t seed) const {
  PolicyTrace trace;
  trace.sampled = sampled;
  trace.kept = ApplyChi(crs_, instance_.outer, sampled,
                        DeriveSeed(seed, kChiSeedLabel));

  const std::uint64_t start_seed = DeriveSeed(seed, kStartSeedLabel);
  std::vector<std::pair<int, int>> order;  // (start slot, item)
  for (int i : trace.kept) {
    order.emplace_back(
        SampleStartTime(solution_, i,
                        HashUniform(start_seed, static_cast<std::uint64_t>(i))),
        i);
  }
  std::sort(order.begin(), order.end());

  RevealingOracle oracle(phi);
  trace.selection = StateVector(static_cast<std::size_t>(instance_.n));
  int accumulated = 0;  // C'
  for (const auto& [start, item] : order) {
    trace.sequence.push_back(item);
    trace.start_times.push_back(start);
    PolicyStep step{item, start, accumulated <= start, accumulated, 0, 0};
    if (step.gate_passed) {
      step.realized_state = oracle.Reveal(item);
      step.realized_cost = instance_.items[item].Cost(step.realized_state);
      accumulated += step.realized_cost;
      trace.selected.push_back(item);
      trace.selection[item] = step.realized_state;
    }
    trace.steps.push_back(step);
    trace.accumulated_cost.push_back(accumulated);
  }
  std::sort(trace.selected.begin(), trace.selected.end());
  trace.reveal_log = oracle.log();
  trace.total_cost = accumulated;
  trace.utility = f_(trace.selection);
  return trace;
}

namespace {

struct FavgAccumulator {
  RunningStats utility;
  std::int64_t inner = 0;
  std::int64_t outer = 0;
  std::int64_t adaptivity = 0;

  void Merge(const FavgAccumulator& other) {
    utility.Merge(other.utility);
    inner += other.inner;
    outer += other.outer;
    adaptivity += other.adaptivity;
  }
};

bool RevealsOnlySelected(const PolicyTrace& trace) {
  std::vector<int> selected_in_order;
  for (const PolicyStep& s : trace.steps) {
    if (s.gate_passed) selected_in_order.push_back(s.item);
  }
  return selected_in_order == trace.reveal_log;
}

}  // namespace

FavgEstimate EstimateFavg(const InnerOuterPolicy& policy, std::int64_t runs,
                          std::uint64_t seed, int workers) {
  if (runs < 2) throw std::invalid_argument("runs must be >= 2");
  const Instance& instance = policy.instance();
  const FavgAccumulator acc = RunBlocked(
      runs, workers, seed, "favg", FavgAccumulator{},
      [&](Rng& rng, std::int64_t, FavgAccumulator& out) {
        const Realization phi = SampleRealization(instance, rng);
        const PolicyTrace trace = policy.Execute(phi, rng());
        out.utility.Add(trace.utility);
        bool prefix_ok = true;
        for (int c : trace.accumulated_cost) prefix_ok &= c <= instance.budget;
        if (!prefix_ok) ++out.inner;
        if (!instance.outer.IsIndependent(trace.selected)) ++out.outer;
        if (!RevealsOnlySelected(trace)) ++out.adaptivity;
      });
  return {acc.utility.Mean(), acc.utility.StandardError(), acc.utility.count(),
          acc.inner,          acc.outer,                   acc.adaptivity};
}

namespace {

struct DominanceAccumulator {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  RunningStats policy_utility;
  RunningStats psi_utility;
  std::int64_t first_violation_index = -1;
  std::string first_violation;

  void Merge(const DominanceAccumulator& other) {
    trials += other.trials;
    violations += other.violations;
    policy_utility.Merge(other.policy_utility);
    psi_utility.Merge(other.psi_utility);
    if (first_violation_index < 0 && other.first_violation_index >= 0) {
      first_violation_index = other.first_violation_index;
      first_violation = other.first_violation;
    }
  }
};

}  // namespace

DominanceReport CoupledDominanceTest(const InnerOuterPolicy& policy,
                                     std::int64_t trials, std::uint64_t seed,
                                     int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Instance& instance = policy.instance();
  const DominanceAccumulator acc = RunBlocked(
      trials, workers, seed, "dominance", DominanceAccumulator{},
      [&](Rng& rng, std::int64_t index, DominanceAccumulator& out) {
        const Realization phi = SampleRealization(instance, rng);
        const std::uint64_t trial_seed = rng();
        const ItemSet sampled = policy.SampleSet(trial_seed);
        const PolicyTrace trace = policy.ExecuteFrom(sampled, phi, trial_seed);
        const StateVector v = Restrict(phi, sampled);
        const StateVector psi_c = PsiC(instance, policy.crs(),
                                       policy.solution(), v, trial_seed);
        const double psi_utility = policy.utility()(psi_c);
        ++out.trials;
        out.policy_utility.Add(trace.utility);
        out.psi_utility.Add(psi_utility);
        const bool dominates = IsBelow(psi_c, trace.selection) &&
                               trace.utility >= psi_utility - 1e-12;
        if (!dominates) {
          ++out.violations;
          if (out.first_violation_index < 0) {
            out.first_violation_index = index;
            nlohmann::json dump = TraceToJson(trace);
            dump["trial"] = index;
            dump["v"] = std::vector<int>(v.begin(), v.end());
            dump["psi_c"] = std::vector<int>(psi_c.begin(), psi_c.end());
            dump["psi_c_utility"] = psi_utility;
            out.first_violation = dump.dump();
          }
        }
      });
  DominanceReport report;
  report.trials = acc.trials;
  report.violations = acc.violations;
  report.mean_policy_utility = acc.policy_utility.Mean();
  report.mean_psi_c_utility = acc.psi_utility.Mean();
  if (acc.first_violation_index >= 0) report.first_violation = acc.first_violation;
  return report;
}

std::string TraceToJsonLine(const PolicyTrace& trace) {
  return TraceToJson(trace).dump();
}

}  // namespace stosub
