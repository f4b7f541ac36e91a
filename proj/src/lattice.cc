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

#include "stosub/lattice.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stosub/errors.h"

namespace stosub {
namespace {

constexpr double kCheckSlack = 1e-9;

void RequireSameLength(const StateVector& u, const StateVector& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("state vectors have different lengths (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  }
}

struct LatticeTable {
  int n;
  int radix;
  std::vector<std::int64_t> stride;  // last coordinate varies fastest
  std::vector<double> value;

  StateVector Decode(std::int64_t index) const {
    StateVector u(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      u[i] = static_cast<int>(index % radix);
      index /= radix;
    }
    return u;
  }
};

LatticeTable Tabulate(const UtilityOracle& f, int n, int max_state) {
  if (n < 0 || max_state < 0) {
    throw std::invalid_argument("item count and max state must be >= 0");
  }
  const std::int64_t size = LatticeSize(n, max_state);
  if (size > kLatticeEnumerationLimit) {
    throw RefusalError("lattice [0;" + std::to_string(max_state) + "]^" +
                       std::to_string(n) + " exceeds the enumeration limit of " +
                       std::to_string(kLatticeEnumerationLimit) + " points");
  }
  LatticeTable table{n, max_state + 1, std::vector<std::int64_t>(n), {}};
  std::int64_t s = 1;
  for (int i = n - 1; i >= 0; --i) {
    table.stride[i] = s;
    s *= table.radix;
  }
  table.value.resize(static_cast<std::size_t>(size));
  StateVector u(static_cast<std::size_t>(n));
  for (std::int64_t idx = 0; idx < size; ++idx) {
    table.value[idx] = f(u);
    // Odometer increment, last coordinate fastest.
    for (int i = n - 1; i >= 0; --i) {
      if (u[i] < max_state) {
        ++u[i];
        break;
      }
      u[i] = 0;
    }
  }
  return table;
}

}  // namespace

std::vector<int> StateVector::Support() const {
  std::vector<int> support;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] != 0) support.push_back(static_cast<int>(i));
  }
  return support;
}

bool StateVector::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int e) { return e == 0; });
}

std::ostream& operator<<(std::ostream& os, const StateVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) os << ',';
    os << v[i];
  }
  return os << ']';
}

StateVector Join(const StateVector& u, const StateVector& v) {
  RequireSameLength(u, v);
  StateVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::max(u[i], v[i]);
  return out;
}

StateVector Meet(const StateVector& u, const StateVector& v) {
  RequireSameLength(u, v);
  StateVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = std::min(u[i], v[i]);
  return out;
}

bool IsBelow(const StateVector& u, const StateVector& v) {
  RequireSameLength(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

std::int64_t LatticeSize(int n, int max_state) {
  std::int64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= max_state + 1;
    if (size > kLatticeEnumerationLimit) return kLatticeEnumerationLimit + 1;
  }
  return size;
}

UtilityOracle UtilityOracle::Modular(std::vector<double> weights) {
  return UtilityOracle(ModularParams{std::move(weights)});
}

UtilityOracle UtilityOracle::ConcaveOverModular(std::vector<double> weights,
                                                ConcaveShape shape,
                                                double theta) {
  return UtilityOracle(ConcaveParams{std::move(weights), shape, theta});
}

UtilityOracle UtilityOracle::Coverage(std::vector<int> multipliers,
                                      std::vector<std::vector<int>> lists,
                                      std::vector<double> element_weights) {
  if (multipliers.size() != lists.size()) {
    throw std::invalid_argument("coverage: one list per item is required");
  }
  for (const auto& list : lists) {
    for (int e : list) {
      if (e < 0 || e >= static_cast<int>(element_weights.size())) {
        throw std::invalid_argument("coverage: element id out of range");
      }
    }
  }
  return UtilityOracle(CoverageParams{std::move(multipliers), std::move(lists),
                                      std::move(element_weights)});
}

UtilityOracle UtilityOracle::Custom(
    std::string name, std::function<double(const StateVector&)> fn) {
  return UtilityOracle(CustomParams{std::move(name), std::move(fn)});
}

UtilityFamily UtilityOracle::family() const {
  return static_cast<UtilityFamily>(params_.index());
}

std::optional<std::size_t> UtilityOracle::arity() const {
  struct Visitor {
    std::optional<std::size_t> operator()(const ModularParams& p) const {
      return p.weights.size();
    }
    std::optional<std::size_t> operator()(const ConcaveParams& p) const {
      return p.weights.size();
    }
    std::optional<std::size_t> operator()(const CoverageParams& p) const {
      return p.multipliers.size();
    }
    std::optional<std::size_t> operator()(const CustomParams&) const {
      return std::nullopt;
    }
  };
  return std::visit(Visitor{}, params_);
}

double UtilityOracle::operator()(const StateVector& u) const {
  struct Visitor {
    const StateVector& u;

    double Linear(const std::vector<double>& w) const {
      double total = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) total += w[i] * u[i];
      return total;
    }
    double operator()(const ModularParams& p) const { return Linear(p.weights); }
    double operator()(const ConcaveParams& p) const {
      const double x = Linear(p.weights);
      return p.shape == ConcaveShape::kMin ? std::min(x, p.theta)
                                           : std::sqrt(std::max(x, 0.0));
    }
    double operator()(const CoverageParams& p) const {
      std::vector<char> covered(p.element_weights.size(), 0);
      double total = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        const auto& list = p.lists[i];
        const std::size_t reach = std::min<std::size_t>(
            list.size(), static_cast<std::size_t>(p.multipliers[i]) * u[i]);
        for (std::size_t k = 0; k < reach; ++k) {
          const int e = list[k];
          if (!covered[e]) {
            covered[e] = 1;
            total += p.element_weights[e];
          }
        }
      }
      return total;
    }
    double operator()(const CustomParams& p) const { return p.fn(u); }
  };
  if (auto n = arity(); n && *n != u.size()) {
    throw std::invalid_argument("utility expects " + std::to_string(*n) +
                                " items, got " + std::to_string(u.size()));
  }
  return std::visit(Visitor{u}, params_);
}

MonotoneCheck CheckMonotone(const UtilityOracle& f, int n, int max_state) {
  const LatticeTable table = Tabulate(f, n, max_state);
  const auto size = static_cast<std::int64_t>(table.value.size());
  for (std::int64_t idx = 0; idx < size; ++idx) {
    const StateVector u = table.Decode(idx);
    for (int j = n - 1; j >= 0; --j) {
      if (u[j] == max_state) continue;
      const std::int64_t up = idx + table.stride[j];
      if (table.value[idx] > table.value[up] + kCheckSlack) {
        return {false, std::make_pair(u, table.Decode(up))};
      }
    }
  }
  return {};
}

SubmodularCheck CheckLatticeSubmodular(const UtilityOracle& f, int n,
                                       int max_state) {
  const LatticeTable table = Tabulate(f, n, max_state);
  const auto size = static_cast<std::int64_t>(table.value.size());
  // Index of w v s*1_i given the index of w and its i-th entry.
  auto raise = [&](std::int64_t idx, int entry, int i, int s) {
    return s > entry ? idx + (s - entry) * table.stride[i] : idx;
  };
  for (std::int64_t u_idx = 0; u_idx < size; ++u_idx) {
    const StateVector u = table.Decode(u_idx);
    for (int j = n - 1; j >= 0; --j) {
      if (u[j] == max_state) continue;
      const std::int64_t v_idx = u_idx + table.stride[j];
      for (int i = 0; i < n; ++i) {
        const int v_entry = i == j ? u[i] + 1 : u[i];
        for (int s = 0; s <= max_state; ++s) {
          const double gain_u =
              table.value[raise(u_idx, u[i], i, s)] - table.value[u_idx];
          const double gain_v =
              table.value[raise(v_idx, v_entry, i, s)] - table.value[v_idx];
          if (gain_u + kCheckSlack < gain_v) {
            return {false, SubmodularityWitness{u, table.Decode(v_idx), s, i}};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace stosub
