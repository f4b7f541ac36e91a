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

#include "stosub/monte_carlo.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "stosub/extension.h"
#include "test_instances.h"

namespace stosub {
namespace {

TEST(RunningStatsTest, MatchesTwoPassFormulas) {
  const std::vector<double> xs{1.0, 4.0, 4.0, 7.5, -2.0, 3.25};
  RunningStats stats;
  for (double x : xs) stats.Add(x);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= xs.size();
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  EXPECT_NEAR(stats.Mean(), mean, 1e-12);
  EXPECT_NEAR(stats.SampleVariance(), ss / (xs.size() - 1), 1e-12);
  EXPECT_NEAR(stats.StandardError(), std::sqrt(ss / (xs.size() - 1) / xs.size()),
              1e-12);
}

TEST(RunningStatsTest, MergeEqualsSequential) {
  RunningStats all, left, right;
  for (int k = 0; k < 100; ++k) {
    const double x = std::sin(k) * 10.0;
    all.Add(x);
    (k < 37 ? left : right).Add(x);
  }
  left.Merge(right);
  EXPECT_EQ(left.count(), all.count());
  EXPECT_NEAR(left.Mean(), all.Mean(), 1e-12);
  EXPECT_NEAR(left.SampleVariance(), all.SampleVariance(), 1e-10);
}

TEST(RunningStatsTest, ConstantHasZeroError) {
  RunningStats stats;
  for (int k = 0; k < 10; ++k) stats.Add(2.5);
  EXPECT_EQ(stats.StandardError(), 0.0);
}

TEST(FromCountsTest, BinomialError) {
  const ProbabilityEstimate e = FromCounts(25, 100);
  EXPECT_DOUBLE_EQ(e.value, 0.25);
  EXPECT_DOUBLE_EQ(e.standard_error, std::sqrt(0.25 * 0.75 / 100));
  EXPECT_FALSE(FromCounts(0, 0).sufficient());
}

struct Sum {
  RunningStats stats;
  void Merge(const Sum& other) { stats.Merge(other.stats); }
};

TEST(RunBlockedTest, IndependentOfWorkerCount) {
  auto fn = [](Rng& rng, std::int64_t, Sum& acc) { acc.stats.Add(NextUnit(rng)); };
  const Sum one = RunBlocked(10000, 1, 99, "t", Sum{}, fn);
  const Sum four = RunBlocked(10000, 4, 99, "t", Sum{}, fn);
  EXPECT_EQ(one.stats.count(), 10000);
  EXPECT_EQ(one.stats.Mean(), four.stats.Mean());
  EXPECT_EQ(one.stats.SampleVariance(), four.stats.SampleVariance());
}

TEST(RunBlockedTest, PropagatesExceptions) {
  auto fn = [](Rng&, std::int64_t s, Sum&) {
    if (s == 3000) throw std::runtime_error("boom");
  };
  EXPECT_THROW(RunBlocked(5000, 3, 1, "t", Sum{}, fn), std::runtime_error);
}

TEST(EstimatorDeterminismTest, SameSeedSameAnswerAnyWorkers) {
  const Instance instance = testing::TwoItemInstance();
  const UtilityOracle f = UtilityOracle::ConcaveOverModular(
      {1.0, 0.7}, ConcaveShape::kSqrt, 1.0);
  const std::vector<double> x{0.3, 0.8};
  const Estimate a = MultilinearMonteCarlo(instance, f, x, 5000, 17, 1);
  const Estimate b = MultilinearMonteCarlo(instance, f, x, 5000, 17, 3);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.standard_error, b.standard_error);
  const Estimate c = MultilinearMonteCarlo(instance, f, x, 5000, 18, 1);
  EXPECT_NE(a.value, c.value);
}

}  // namespace
}  // namespace stosub
