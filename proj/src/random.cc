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

#include "stosub/random.h"

#include <cassert>

namespace stosub {

std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label,
                         std::uint64_t index) {
  // FNV-1a over the label.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return Mix64(Mix64(seed ^ h) + Mix64(index));
}

int SampleCategorical(std::span<const double> probs, double u) {
  assert(!probs.empty());
  double cumulative = 0.0;
  int last_positive = -1;
  for (int k = 0; k < static_cast<int>(probs.size()); ++k) {
    if (probs[k] <= 0.0) continue;
    last_positive = k;
    cumulative += probs[k];
    if (u < cumulative) return k;
  }
  // Rounding can leave the cumulative sum a hair below 1.
  assert(last_positive >= 0);
  return last_positive;
}

}  // namespace stosub
