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

#ifndef STOSUB_RANDOM_H_
#define STOSUB_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace stosub {

// All randomness in the library flows from a single 64-bit seed. Sub-streams
// are obtained by hashing (seed, component label, index) into a fresh seed.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index = 0);

// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
inline double ToUnit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double NextUnit(Rng& rng) { return ToUnit(rng()); }

// A uniform in [0, 1) that depends only on (seed, index). Used where the same
// draw has to be reproduced for an item regardless of which other items are
// present.
inline double HashUniform(std::uint64_t seed, std::uint64_t index) {
  return ToUnit(Mix64(seed ^ Mix64(index + 0x9e3779b97f4a7c15ULL)));
}

// Inverse-CDF draw from a finite distribution. Zero-probability outcomes are
// never returned. Returns an index into `probs`.
int SampleCategorical(std::span<const double> probs, double u);

}  // namespace stosub

#endif  // STOSUB_RANDOM_H_
