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

#include "stosub/outer_constraint.h"

#include <vector>

#include <gtest/gtest.h>

#include "stosub/errors.h"
#include "stosub/random.h"

namespace stosub {
namespace {

// 0-based item ids throughout.
TEST(IsIndependentTest, Examples) {
  const auto card = OuterConstraint::Cardinality(2);
  EXPECT_TRUE(card.IsIndependent(std::vector<int>{0, 2}));
  EXPECT_FALSE(card.IsIndependent(std::vector<int>{0, 1, 2}));
  const auto part = OuterConstraint::Partition({{0, 1}, {2}}, {1, 1});
  EXPECT_FALSE(part.IsIndependent(std::vector<int>{0, 1}));
  EXPECT_TRUE(part.IsIndependent(std::vector<int>{0, 2}));
  EXPECT_TRUE(part.IsIndependent(std::vector<int>{}));
}

TEST(IsIndependentTest, PartitionLeavesUncoveredItemsFree) {
  const auto part = OuterConstraint::Partition({{0, 1}}, {1});
  EXPECT_TRUE(part.IsIndependent(std::vector<int>{0, 2, 3}));
}

TEST(IsIndependentTest, ExplicitFamily) {
  const auto fam = OuterConstraint::Explicit({{1, 0}, {2}});
  EXPECT_TRUE(fam.IsIndependent(std::vector<int>{}));
  EXPECT_TRUE(fam.IsIndependent(std::vector<int>{1}));
  EXPECT_TRUE(fam.IsIndependent(std::vector<int>{0, 1}));
  EXPECT_FALSE(fam.IsIndependent(std::vector<int>{0, 2}));
}

TEST(PolytopeInequalitiesTest, Examples) {
  const auto card = OuterConstraint::Cardinality(2).PolytopeInequalities(3);
  ASSERT_EQ(card.size(), 1u);
  EXPECT_EQ(card[0].coefficients, (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(card[0].bound, 2.0);

  const auto part =
      OuterConstraint::Partition({{0, 1}, {2}}, {1, 1}).PolytopeInequalities(3);
  ASSERT_EQ(part.size(), 2u);
  EXPECT_EQ(part[0].coefficients, (std::vector<double>{1, 1, 0}));
  EXPECT_EQ(part[1].coefficients, (std::vector<double>{0, 0, 1}));
  EXPECT_EQ(part[1].bound, 1.0);

  const auto vacuous = OuterConstraint::Cardinality(4).PolytopeInequalities(4);
  EXPECT_EQ(vacuous[0].bound, 4.0);

  EXPECT_THROW(OuterConstraint::Explicit({{0}}).PolytopeInequalities(1),
               RefusalError);
}

TEST(ContainsScaledTest, Examples) {
  const auto card = OuterConstraint::Cardinality(2);
  const std::vector<double> x{0.5, 0.5, 0.5};
  EXPECT_TRUE(card.ContainsScaled(x, 1.0));
  EXPECT_FALSE(card.ContainsScaled(x, 0.5));
  const std::vector<double> zero(3, 0.0);
  for (double l : {0.0, 0.1, 1.0}) EXPECT_TRUE(card.ContainsScaled(zero, l));
}

TEST(ContainsScaledTest, ExplicitFamilyHull) {
  // Maximal sets {0,1} and {2}: (0.5,0.5,0.5) is the midpoint of 1_{01} and
  // 1_{2}, while (1,0,0.5) is outside the hull.
  const auto fam = OuterConstraint::Explicit({{0, 1}, {2}});
  EXPECT_TRUE(fam.ContainsScaled(std::vector<double>{0.5, 0.5, 0.5}, 1.0));
  EXPECT_FALSE(fam.ContainsScaled(std::vector<double>{1.0, 0.0, 0.5}, 1.0));
  EXPECT_TRUE(fam.ContainsScaled(std::vector<double>{0.25, 0.0, 0.25}, 0.5));
  EXPECT_THROW(fam.ContainsScaled(std::vector<double>(11, 0.0), 1.0),
               RefusalError);
}

std::vector<int> MaskToSet(int mask, int n) {
  std::vector<int> set;
  for (int i = 0; i < n; ++i) {
    if (mask & (1 << i)) set.push_back(i);
  }
  return set;
}

std::vector<double> Indicator(int mask, int n) {
  std::vector<double> x(n, 0.0);
  for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1;
  return x;
}

TEST(ContainsScaledTest, AgreesWithIndependenceOnVertices) {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    std::vector<OuterConstraint> outers{
        OuterConstraint::Cardinality(static_cast<int>(rng() % (n + 1)))};
    std::vector<std::vector<int>> blocks(3);
    for (int i = 0; i < n; ++i) blocks[rng() % 3].push_back(i);
    outers.push_back(OuterConstraint::Partition(
        blocks, {static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                 static_cast<int>(rng() % 3)}));
    for (const auto& outer : outers) {
      for (int mask = 0; mask < (1 << n); ++mask) {
        ASSERT_EQ(outer.IsIndependent(MaskToSet(mask, n)),
                  outer.ContainsScaled(Indicator(mask, n), 1.0));
      }
    }
  }
}

TEST(ContainsScaledTest, ExplicitAgreesWithIndependenceOnVertices) {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> maximal;
    for (int s = 0; s < 3; ++s) maximal.push_back(MaskToSet(rng() % (1 << n), n));
    const auto fam = OuterConstraint::Explicit(maximal);
    for (int mask = 0; mask < (1 << n); ++mask) {
      ASSERT_EQ(fam.IsIndependent(MaskToSet(mask, n)),
                fam.ContainsScaled(Indicator(mask, n), 1.0));
    }
  }
}

TEST(DownwardClosureTest, SubsetsOfIndependentSetsAreIndependent) {
  Rng rng(10);
  const int n = 6;
  const std::vector<OuterConstraint> outers{
      OuterConstraint::Cardinality(3),
      OuterConstraint::Partition({{0, 1, 2}, {3, 4}}, {2, 1}),
      OuterConstraint::Explicit({{0, 1, 5}, {2, 3}, {4}})};
  for (const auto& outer : outers) {
    for (int trial = 0; trial < 300; ++trial) {
      const int mask = static_cast<int>(rng() % (1 << n));
      if (!outer.IsIndependent(MaskToSet(mask, n))) continue;
      const int sub = mask & static_cast<int>(rng() % (1 << n));
      EXPECT_TRUE(outer.IsIndependent(MaskToSet(sub, n)));
    }
  }
}

TEST(ValidateTest, ReportsMalformedDescriptors) {
  EXPECT_FALSE(OuterConstraint::Cardinality(-1).Validate(2).empty());
  EXPECT_FALSE(OuterConstraint::Partition({{0}, {0}}, {1, 1}).Validate(2).empty());
  EXPECT_FALSE(OuterConstraint::Partition({{0}}, {1, 1}).Validate(2).empty());
  EXPECT_FALSE(OuterConstraint::Explicit({{3}}).Validate(2).empty());
  EXPECT_TRUE(OuterConstraint::Partition({{0}, {1}}, {1, 0}).Validate(2).empty());
}

}  // namespace
}  // namespace stosub
