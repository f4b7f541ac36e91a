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

#ifndef STOSUB_MONTE_CARLO_H_
#define STOSUB_MONTE_CARLO_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

#include "stosub/random.h"

namespace stosub {

// Mean/variance accumulator (Welford, with Chan's pairwise merge). A constant
// sample stream yields exactly zero variance.
class RunningStats {
 public:
  void Add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  void Merge(const RunningStats& other) {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double n_a = static_cast<double>(count_);
    const double n_b = static_cast<double>(other.count_);
    const double delta = other.mean_ - mean_;
    const double total = n_a + n_b;
    mean_ += delta * n_b / total;
    m2_ += other.m2_ + delta * delta * n_a * n_b / total;
    count_ += other.count_;
  }

  std::int64_t count() const { return count_; }
  double Mean() const { return mean_; }
  double SampleVariance() const {
    return count_ > 1 ? std::max(0.0, m2_ / static_cast<double>(count_ - 1))
                      : 0.0;
  }
  // Sample standard deviation over sqrt(count).
  double StandardError() const {
    return count_ > 1 ? std::sqrt(SampleVariance() / static_cast<double>(count_))
                      : 0.0;
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct Estimate {
  double value = 0.0;
  double standard_error = 0.0;
};

inline Estimate ToEstimate(const RunningStats& stats) {
  return {stats.Mean(), stats.StandardError()};
}

// Frequency of an event among conditioning trials. `trials == 0` means the
// conditioning event never occurred.
struct ProbabilityEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::int64_t trials = 0;

  bool sufficient() const { return trials > 0; }
};

inline ProbabilityEstimate FromCounts(std::int64_t hits, std::int64_t trials) {
  if (trials == 0) return {};
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(trials)), trials};
}

inline constexpr std::int64_t kSamplesPerBlock = 1024;

// Runs `count` samples split into fixed-size blocks. Block b draws from its own
// stream seeded with DeriveSeed(seed, label, b), and block accumulators are
// merged in block order, so the result is identical for any worker count.
//
// `fn(Rng&, std::int64_t sample_index, Acc&)` processes one sample;
// `Acc` must provide `void Merge(const Acc&)`.
template <typename Acc, typename Fn>
Acc RunBlocked(std::int64_t count, int workers, std::uint64_t seed,
               std::string_view label, const Acc& zero, Fn&& fn) {
  const std::int64_t blocks = (count + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<Acc> partial(static_cast<std::size_t>(blocks), zero);
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    try {
      for (std::int64_t b = next++; b < blocks; b = next++) {
        Rng rng(DeriveSeed(seed, label, static_cast<std::uint64_t>(b)));
        const std::int64_t begin = b * kSamplesPerBlock;
        const std::int64_t end = std::min(count, begin + kSamplesPerBlock);
        for (std::int64_t s = begin; s < end; ++s) {
          fn(rng, s, partial[static_cast<std::size_t>(b)]);
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
    }
  };

  const int threads = static_cast<int>(
      std::clamp<std::int64_t>(workers, 1, std::max<std::int64_t>(blocks, 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  Acc result = zero;
  for (const Acc& acc : partial) result.Merge(acc);
  return result;
}

}  // namespace stosub

#endif  // STOSUB_MONTE_CARLO_H_
