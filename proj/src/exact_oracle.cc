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

#include "stosub/exact_oracle.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "stosub/errors.h"

namespace stosub {
namespace {

constexpr double kTieTol = 1e-12;

void RequireOracleScale(const Instance& instance) {
  if (instance.n > kOracleMaxItems || instance.max_state > kOracleMaxStates) {
    throw RefusalError("exact adaptive oracle is limited to n <= " +
                       std::to_string(kOracleMaxItems) + " and B <= " +
                       std::to_string(kOracleMaxStates));
  }
  RequireValid(instance);
}

// Observed states are the DecisionState; remaining budget follows from them.
class Solver {
 public:
  Solver(const Instance& instance, const UtilityOracle& f)
      : instance_(instance), f_(f) {}

  double Value(StateVector& observed, int remaining) {
    const std::int64_t key = Key(observed);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;

    Entry best{f_(observed), -1};
    const ItemSet selected = observed.Support();
    for (int i = 0; i < instance_.n; ++i) {
      if (observed[i] != 0 || !Admissible(selected, i, remaining)) continue;
      double value = 0.0;
      const ItemModel& item = instance_.items[i];
      for (int s = 1; s <= instance_.max_state; ++s) {
        if (item.Prob(s) <= 0.0) continue;
        observed[i] = s;
        value += item.Prob(s) * Value(observed, remaining - item.Cost(s));
      }
      observed[i] = 0;
      if (value > best.value + kTieTol) best = {value, i};
    }
    memo_.emplace(key, best);
    return best.value;
  }

  PolicyTree Extract(StateVector& observed, int remaining) {
    Value(observed, remaining);
    const Entry& entry = memo_.at(Key(observed));
    PolicyTree node;
    node.item = entry.action;
    if (node.IsStop()) return node;
    const ItemModel& item = instance_.items[node.item];
    node.children.resize(instance_.max_state);
    for (int s = 1; s <= instance_.max_state; ++s) {
      if (item.Prob(s) <= 0.0) continue;
      observed[node.item] = s;
      node.children[s - 1] = Extract(observed, remaining - item.Cost(s));
    }
    observed[node.item] = 0;
    return node;
  }

  bool Admissible(const ItemSet& selected, int i, int remaining) const {
    if (instance_.items[i].WorstCost() > remaining) return false;
    ItemSet with = selected;
    with.insert(std::upper_bound(with.begin(), with.end(), i), i);
    return instance_.outer.IsIndependent(with);
  }

 private:
  struct Entry {
    double value;
    int action;
  };

  std::int64_t Key(const StateVector& observed) const {
    std::int64_t key = 0;
    for (int e : observed) key = key * (instance_.max_state + 1) + e;
    return key;
  }

  const Instance& instance_;
  const UtilityOracle& f_;
  std::unordered_map<std::int64_t, Entry> memo_;
};

double Evaluate(const Instance& instance, const UtilityOracle& f,
                const PolicyTree& node, StateVector& observed) {
  if (node.IsStop()) return f(observed);
  const int i = node.item;
  if (i >= instance.n || observed[i] != 0) {
    throw std::invalid_argument("policy tree selects item " +
                                std::to_string(i + 1) + " twice or out of range");
  }
  if (static_cast<int>(node.children.size()) != instance.max_state) {
    throw std::invalid_argument("policy tree node needs one child per state");
  }
  double value = 0.0;
  for (int s = 1; s <= instance.max_state; ++s) {
    const double p = instance.items[i].Prob(s);
    if (p <= 0.0) continue;
    observed[i] = s;
    value += p * Evaluate(instance, f, node.children[s - 1], observed);
  }
  observed[i] = 0;
  return value;
}

bool Feasible(const Instance& instance, const PolicyTree& node,
              StateVector& observed, int remaining) {
  if (node.IsStop()) return true;
  const int i = node.item;
  if (i >= instance.n || observed[i] != 0 ||
      static_cast<int>(node.children.size()) != instance.max_state) {
    return false;
  }
  ItemSet with = observed.Support();
  with.insert(std::upper_bound(with.begin(), with.end(), i), i);
  if (!instance.outer.IsIndependent(with)) return false;
  bool ok = true;
  for (int s = 1; s <= instance.max_state && ok; ++s) {
    if (instance.items[i].Prob(s) <= 0.0) continue;
    const int left = remaining - instance.items[i].Cost(s);
    if (left < 0) return false;
    observed[i] = s;
    ok = Feasible(instance, node.children[s - 1], observed, left);
  }
  observed[i] = 0;
  return ok;
}

}  // namespace

OptimalPolicy OptimalAdaptiveValue(const Instance& instance,
                                   const UtilityOracle& f) {
  RequireOracleScale(instance);
  Solver solver(instance, f);
  StateVector observed(static_cast<std::size_t>(instance.n));
  OptimalPolicy result;
  result.value = solver.Value(observed, instance.budget);
  result.tree = solver.Extract(observed, instance.budget);
  result.first_action = result.tree.item;
  return result;
}

double EvaluatePolicyExact(const Instance& instance, const UtilityOracle& f,
                           const PolicyTree& tree) {
  RequireOracleScale(instance);
  StateVector observed(static_cast<std::size_t>(instance.n));
  return Evaluate(instance, f, tree, observed);
}

bool IsFeasiblePolicy(const Instance& instance, const PolicyTree& tree) {
  StateVector observed(static_cast<std::size_t>(instance.n));
  return Feasible(instance, tree, observed, instance.budget);
}

nlohmann::json PolicyTreeToJson(const PolicyTree& tree) {
  if (tree.IsStop()) return {{"stop", true}};
  nlohmann::json children = nlohmann::json::object();
  for (std::size_t s = 0; s < tree.children.size(); ++s) {
    children[std::to_string(s + 1)] = PolicyTreeToJson(tree.children[s]);
  }
  return {{"item", tree.item + 1}, {"children", children}};
}

}  // namespace stosub
