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

#ifndef STOSUB_EXTENSION_H_
#define STOSUB_EXTENSION_H_

#include <cstdint>
#include <span>

#include "stosub/lattice.h"
#include "stosub/monte_carlo.h"
#include "stosub/stochastic_model.h"

namespace stosub {

// Expected utility of a fixed set, fbar(S) = E[f(Phi_S)], and the
// multilinear extension F(x) = sum_U prod x / prod (1 - x) fbar(U).
//
// The exact enumerators are the trusted oracles for the Monte Carlo versions.

inline constexpr std::int64_t kSetEnumerationLimit = 1'000'000;  // B^|S|
inline constexpr int kExtensionMaxItems = 10;
inline constexpr std::int64_t kExtensionMaxJointStates = 10'000;  // B^n

double FbarExact(const Instance& instance, const UtilityOracle& f,
                 std::span<const int> set);

Estimate FbarMonteCarlo(const Instance& instance, const UtilityOracle& f,
                        std::span<const int> set, std::int64_t samples,
                        std::uint64_t seed, int workers = 1);

double MultilinearExact(const Instance& instance, const UtilityOracle& f,
                        std::span<const double> marginals);

Estimate MultilinearMonteCarlo(const Instance& instance, const UtilityOracle& f,
                               std::span<const double> marginals,
                               std::int64_t samples, std::uint64_t seed,
                               int workers = 1);

// Throws std::invalid_argument unless every entry is in [0, 1] and the
// length matches the instance.
void RequireMarginals(const Instance& instance,
                      std::span<const double> marginals);

}  // namespace stosub

#endif  // STOSUB_EXTENSION_H_
