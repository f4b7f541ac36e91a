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

#include "stosub/crs.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stosub {
namespace {

struct CountTable {
  std::vector<std::int64_t> hits;
  std::vector<std::int64_t> trials;

  void Merge(const CountTable& other) {
    for (std::size_t k = 0; k < hits.size(); ++k) {
      hits[k] += other.hits[k];
      trials[k] += other.trials[k];
    }
  }
};

ItemSet SampleSet(std::span<const double> marginals, Rng& rng) {
  ItemSet set;
  for (int i = 0; i < static_cast<int>(marginals.size()); ++i) {
    if (NextUnit(rng) < marginals[i]) set.push_back(i);
  }
  return set;
}

}  // namespace

double BalancedCrs::DocumentedGamma() const {
  if (kind == CrsKind::kIdentity) return 1.0;
  return (1.0 - std::exp(-beta)) / beta;
}

std::string_view CrsKindName(CrsKind kind) {
  return kind == CrsKind::kIdentity ? "identity" : "priority";
}

std::string_view MappingName(CrsMapping mapping) {
  switch (mapping) {
    case CrsMapping::kA:
      return "psi_a";
    case CrsMapping::kB:
      return "psi_b";
    case CrsMapping::kC:
      return "psi_c";
  }
  return "";
}

ItemSet ApplyChi(const BalancedCrs& crs, const OuterConstraint& outer,
                 std::span<const int> sampled, std::uint64_t seed) {
  if (crs.kind == CrsKind::kIdentity) {
    if (!outer.IsIndependent(sampled)) {
      throw std::logic_error(
          "identity scheme applied to a set that is not independent");
    }
    return {sampled.begin(), sampled.end()};
  }
  std::vector<std::pair<double, int>> order;
  order.reserve(sampled.size());
  for (int i : sampled) {
    order.emplace_back(HashUniform(seed, static_cast<std::uint64_t>(i)), i);
  }
  std::sort(order.begin(), order.end());
  ItemSet kept;
  for (const auto& [priority, item] : order) {
    kept.insert(std::upper_bound(kept.begin(), kept.end(), item), item);
    if (!outer.IsIndependent(kept)) {
      kept.erase(std::find(kept.begin(), kept.end(), item));
    }
  }
  return kept;
}

StateVector SampleV(const Instance& instance, std::span<const double> marginals,
                    Rng& rng) {
  StateVector v(static_cast<std::size_t>(instance.n));
  for (int i = 0; i < instance.n; ++i) {
    const bool in_set = NextUnit(rng) < marginals[i];
    const int state = SampleState(instance.items[i], rng);
    if (in_set) v[i] = state;
  }
  return v;
}

StateVector SampleV(const Instance& instance, std::span<const double> marginals,
                    std::uint64_t seed) {
  Rng rng(seed);
  return SampleV(instance, marginals, rng);
}

int SampleStartTime(const TimeIndexedSolution& solution, int item, double u) {
  const double total = solution.marginals[item];
  if (!(total > 0.0)) {
    throw std::invalid_argument("item " + std::to_string(item + 1) +
                                " has zero marginal and no start-time law");
  }
  return SampleCategorical(solution.x[item], u * total) + 1;
}

std::vector<ProbabilityEstimate> EstimateGamma(
    const BalancedCrs& crs, const Instance& instance,
    std::span<const double> marginals, std::int64_t trials,
    std::uint64_t seed, int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (!instance.outer.ContainsScaled(marginals, crs.beta)) {
    throw std::invalid_argument("marginals are not inside beta * P");
  }
  const int n = instance.n;
  CountTable zero{std::vector<std::int64_t>(n), std::vector<std::int64_t>(n)};
  const CountTable counts = RunBlocked(
      trials, workers, seed, "gamma", zero,
      [&](Rng& rng, std::int64_t, CountTable& acc) {
        const ItemSet sampled = SampleSet(marginals, rng);
        const ItemSet kept = ApplyChi(crs, instance.outer, sampled, rng());
        for (int i : sampled) ++acc.trials[i];
        for (int i : kept) ++acc.hits[i];
      });
  std::vector<ProbabilityEstimate> out(n);
  for (int i = 0; i < n; ++i) out[i] = FromCounts(counts.hits[i], counts.trials[i]);
  return out;
}

StateVector PsiA(const Instance& instance, const BalancedCrs& crs,
                 const StateVector& v, std::uint64_t seed) {
  const ItemSet kept = ApplyChi(crs, instance.outer, v.Support(),
                                DeriveSeed(seed, kChiSeedLabel));
  StateVector out(v.size());
  for (int i : kept) out[i] = v[i];
  return out;
}

std::pair<StateVector, StartTimeAssignment> PsiB(
    const Instance& instance, const TimeIndexedSolution& solution,
    const StateVector& v, std::uint64_t seed) {
  const std::uint64_t start_seed = DeriveSeed(seed, kStartSeedLabel);
  const std::vector<int> sampled = v.Support();
  StartTimeAssignment times{std::vector<int>(v.size(), 0)};
  for (int i : sampled) {
    times.start_times[i] = SampleStartTime(
        solution, i, HashUniform(start_seed, static_cast<std::uint64_t>(i)));
  }
  StateVector out(v.size());
  for (int i : sampled) {
    const int t = times.start_times[i];
    long long load = 0;
    for (int other : sampled) {
      if (other != i && times.start_times[other] <= t) {
        load += instance.items[other].Cost(v[other]);
      }
    }
    if (load <= t) out[i] = v[i];
  }
  return {std::move(out), std::move(times)};
}

StateVector PsiC(const Instance& instance, const BalancedCrs& crs,
                 const TimeIndexedSolution& solution, const StateVector& v,
                 std::uint64_t seed) {
  const StateVector a = PsiA(instance, crs, v, seed);
  const StateVector b = PsiB(instance, solution, v, seed).first;
  StateVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && a[i] == v[i] && b[i] == v[i]) out[i] = v[i];
  }
  return out;
}

ProbabilityEstimate AlphaTable::Min() const {
  ProbabilityEstimate best;
  bool found = false;
  for (const auto& row : keep) {
    for (const ProbabilityEstimate& e : row) {
      if (!e.sufficient()) continue;
      if (!found || e.value < best.value) {
        best = e;
        found = true;
      }
    }
  }
  return best;
}

AlphaTable EstimateAlpha(CrsMapping mapping, const Instance& instance,
                         const BalancedCrs& crs,
                         const TimeIndexedSolution& solution,
                         std::int64_t trials, std::uint64_t seed,
                         int workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const int n = instance.n;
  const int states = instance.max_state;
  const auto cells = static_cast<std::size_t>(n) * states;
  CountTable zero{std::vector<std::int64_t>(cells),
                  std::vector<std::int64_t>(cells)};
  const CountTable counts = RunBlocked(
      trials, workers, seed, MappingName(mapping), zero,
      [&](Rng& rng, std::int64_t, CountTable& acc) {
        const StateVector v = SampleV(instance, solution.marginals, rng);
        const std::uint64_t mapping_seed = rng();
        StateVector out;
        switch (mapping) {
          case CrsMapping::kA:
            out = PsiA(instance, crs, v, mapping_seed);
            break;
          case CrsMapping::kB:
            out = PsiB(instance, solution, v, mapping_seed).first;
            break;
          case CrsMapping::kC:
            out = PsiC(instance, crs, solution, v, mapping_seed);
            break;
        }
        for (int i = 0; i < n; ++i) {
          if (v[i] == 0) continue;
          const std::size_t cell = static_cast<std::size_t>(i) * states + v[i] - 1;
          ++acc.trials[cell];
          if (out[i] == v[i]) ++acc.hits[cell];
        }
      });
  AlphaTable table{mapping, {}};
  table.keep.assign(n, std::vector<ProbabilityEstimate>(states));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < states; ++j) {
      const std::size_t cell = static_cast<std::size_t>(i) * states + j;
      table.keep[i][j] = FromCounts(counts.hits[cell], counts.trials[cell]);
    }
  }
  return table;
}

}  // namespace stosub
