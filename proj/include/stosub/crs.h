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

#ifndef STOSUB_CRS_H_
#define STOSUB_CRS_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stosub/continuous_greedy.h"
#include "stosub/lattice.h"
#include "stosub/monte_carlo.h"
#include "stosub/outer_constraint.h"
#include "stosub/stochastic_model.h"

namespace stosub {

enum class CrsKind {
  // Returns the sampled set unchanged; only valid when every sampled set is
  // already independent.
  kIdentity,
  // Scan the sampled items in uniformly random priority order and keep an
  // item iff the kept set stays independent.
  kRandomPriority,
};

// A balanced contention resolution scheme for the outer family. `beta` is the
// scale at which the marginals are certified to live.
struct BalancedCrs {
  CrsKind kind = CrsKind::kRandomPriority;
  double beta = 0.25;

  // Closed-form keep probability the scheme is measured against:
  // (1 - e^-b) / b for the matroid scheme, 1 for identity.
  double DocumentedGamma() const;
};

std::string_view CrsKindName(CrsKind kind);

// Seed labels shared by the policy and the analysis mappings, so that both
// see the same pruning and the same start times for a given seed.
inline constexpr std::string_view kChiSeedLabel = "chi";
inline constexpr std::string_view kStartSeedLabel = "start";

// chi(R). Item priorities are HashUniform(seed, item), so a fixed seed couples
// the scheme across different input sets.
ItemSet ApplyChi(const BalancedCrs& crs, const OuterConstraint& outer,
                 std::span<const int> sampled, std::uint64_t seed);

// v(i) = j >= 1 with probability p_i(j) * ybar(i), v(i) = 0 otherwise.
StateVector SampleV(const Instance& instance, std::span<const double> marginals,
                    Rng& rng);
StateVector SampleV(const Instance& instance, std::span<const double> marginals,
                    std::uint64_t seed);

// Start slot for an item drawn with probability y(i,t) / ybar(i) by inverse
// CDF at `u`. Throws std::invalid_argument when ybar(i) = 0.
int SampleStartTime(const TimeIndexedSolution& solution, int item, double u);

// Per-item keep frequency Pr[i in chi(R) | i in R] with R drawn from the
// marginals. Rejects marginals outside beta * P.
std::vector<ProbabilityEstimate> EstimateGamma(
    const BalancedCrs& crs, const Instance& instance,
    std::span<const double> marginals, std::int64_t trials,
    std::uint64_t seed, int workers = 1);

// Outer-constraint pruning: keep v(i) on chi(R(v)), 0 elsewhere.
StateVector PsiA(const Instance& instance, const BalancedCrs& crs,
                 const StateVector& v, std::uint64_t seed);

// start_times[i] is the sampled slot for i in R(v) and 0 elsewhere.
struct StartTimeAssignment {
  std::vector<int> start_times;
};

// Budget pruning: keep v(i) iff the other sampled items starting no later
// than t(i) have total cost at most t(i).
std::pair<StateVector, StartTimeAssignment> PsiB(
    const Instance& instance, const TimeIndexedSolution& solution,
    const StateVector& v, std::uint64_t seed);

// Keeps v(i) iff both PsiA and PsiB keep it, run with independent sub-seeds.
StateVector PsiC(const Instance& instance, const BalancedCrs& crs,
                 const TimeIndexedSolution& solution, const StateVector& v,
                 std::uint64_t seed);

enum class CrsMapping { kA, kB, kC };

std::string_view MappingName(CrsMapping mapping);

// keep[i][j - 1] estimates Pr[psi(v)(i) = j | v(i) = j] for v drawn from the
// marginals of `solution`.
struct AlphaTable {
  CrsMapping mapping = CrsMapping::kA;
  std::vector<std::vector<ProbabilityEstimate>> keep;

  // Smallest estimate over pairs with data, with its standard error.
  ProbabilityEstimate Min() const;
};

AlphaTable EstimateAlpha(CrsMapping mapping, const Instance& instance,
                         const BalancedCrs& crs,
                         const TimeIndexedSolution& solution,
                         std::int64_t trials, std::uint64_t seed,
                         int workers = 1);

}  // namespace stosub

#endif  // STOSUB_CRS_H_
