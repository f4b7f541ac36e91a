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

#ifndef STOSUB_LATTICE_H_
#define STOSUB_LATTICE_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace stosub {

// A point of the integer lattice [0;B]^n. Entry 0 means "not selected".
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n) : entries_(n, 0) {}
  explicit StateVector(std::vector<int> entries)
      : entries_(std::move(entries)) {}
  StateVector(std::initializer_list<int> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Items with a nonzero entry, ascending.
  std::vector<int> Support() const;
  bool IsZero() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const StateVector& v);

// Componentwise max / min. Throw std::invalid_argument on length mismatch.
StateVector Join(const StateVector& u, const StateVector& v);
StateVector Meet(const StateVector& u, const StateVector& v);

// u <= v in the componentwise order.
bool IsBelow(const StateVector& u, const StateVector& v);

// Largest enumeration the exhaustive checkers accept.
inline constexpr std::int64_t kLatticeEnumerationLimit = 1'000'000;

// (B+1)^n, saturating at kLatticeEnumerationLimit + 1.
std::int64_t LatticeSize(int n, int max_state);

enum class UtilityFamily { kModular, kConcaveOverModular, kCoverage, kCustom };
enum class ConcaveShape { kMin, kSqrt };

// f(u) = sum_i w_i * u(i).
struct ModularParams {
  std::vector<double> weights;
};

// f(u) = g(sum_i w_i * u(i)) with g(x) = min(x, theta) or g(x) = sqrt(x).
struct ConcaveParams {
  std::vector<double> weights;
  ConcaveShape shape = ConcaveShape::kMin;
  double theta = 1.0;
};

// Item i in state s covers the first multipliers[i] * s elements of lists[i];
// f(u) is the total element weight of the union of covered elements.
struct CoverageParams {
  std::vector<int> multipliers;
  std::vector<std::vector<int>> lists;
  std::vector<double> element_weights;
};

struct CustomParams {
  std::string name;
  std::function<double(const StateVector&)> fn;
};

using UtilityParams =
    std::variant<ModularParams, ConcaveParams, CoverageParams, CustomParams>;

// Immutable utility f : [0;B]^n -> R. Safe to evaluate concurrently.
class UtilityOracle {
 public:
  static UtilityOracle Modular(std::vector<double> weights);
  static UtilityOracle ConcaveOverModular(std::vector<double> weights,
                                          ConcaveShape shape, double theta);
  static UtilityOracle Coverage(std::vector<int> multipliers,
                                std::vector<std::vector<int>> lists,
                                std::vector<double> element_weights);
  static UtilityOracle Custom(std::string name,
                              std::function<double(const StateVector&)> fn);

  double operator()(const StateVector& u) const;

  UtilityFamily family() const;
  const UtilityParams& params() const { return params_; }
  // Number of items the parameters describe, or nullopt for custom oracles.
  std::optional<std::size_t> arity() const;

 private:
  explicit UtilityOracle(UtilityParams params) : params_(std::move(params)) {}

  UtilityParams params_;
};

struct MonotoneCheck {
  bool ok = true;
  // (u, v) with u <= v and f(u) > f(v).
  std::optional<std::pair<StateVector, StateVector>> witness;
};

struct SubmodularityWitness {
  StateVector u;
  StateVector v;
  int state = 0;
  int item = 0;
};

struct SubmodularCheck {
  bool ok = true;
  std::optional<SubmodularityWitness> witness;
};

// Exhaustive checks over [0;B]^n with slack 1e-9. Throw RefusalError when
// (B+1)^n exceeds kLatticeEnumerationLimit.
//
// Both properties are checked along covering pairs v = u + e_j (v visited in
// lexicographic order), which is equivalent to checking all pairs u <= v:
// monotonicity and antitone marginal gains both chain along covers.
MonotoneCheck CheckMonotone(const UtilityOracle& f, int n, int max_state);
SubmodularCheck CheckLatticeSubmodular(const UtilityOracle& f, int n,
                                       int max_state);

}  // namespace stosub

#endif  // STOSUB_LATTICE_H_
