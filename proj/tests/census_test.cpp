// Copyright 2026 The toruspack Authors.
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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "toruspack/census.hpp"
#include "toruspack/errors.hpp"

namespace {

namespace tp = toruspack;

TEST(Census, ThreeCircleStageCounts) {
  const auto c = tp::enumerate_census(3);
  EXPECT_EQ(c.counts(), (std::array<std::size_t, 3>{37, 10, 3}));
}

TEST(Census, FourCircleStageCounts) {
  const auto c = tp::enumerate_census(4);
  EXPECT_EQ(c.counts(), (std::array<std::size_t, 3>{825, 102, 20}));
  EXPECT_EQ(c.stage3.size() + tp::enumerate_census(3).stage3.size(), 23u);
}

TEST(Census, RejectsOtherSizes) {
  EXPECT_THROW(tp::enumerate_census(2), tp::UnsupportedN);
  EXPECT_THROW(tp::enumerate_census(5), tp::UnsupportedN);
}

// Independent count of stage 1 for three circles: multiplicity triples
// (a, b, c) with at most one zero and a total edge count in [5, 9], up to
// permutation.
TEST(Census, ThreeCircleStageOneByHand) {
  std::set<std::array<int, 3>> seen;
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b)
      for (int c = 0; c <= 9; ++c) {
        const int e = a + b + c;
        if (e < 5 || e > 9) continue;
        if ((a == 0) + (b == 0) + (c == 0) > 1) continue;
        std::array<int, 3> k{a, b, c};
        std::sort(k.begin(), k.end());
        seen.insert(k);
      }
  EXPECT_EQ(seen.size(), 37u);
}

TEST(Census, StagesAreNestedAndSatisfyTheirConditions) {
  const auto c = tp::enumerate_census(4);
  std::set<tp::CanonicalForm> s1;
  for (const auto& g : c.stage1) {
    EXPECT_TRUE(g.connected());
    EXPECT_GE(g.edge_count(), 7);
    EXPECT_LE(g.edge_count(), 12);
    s1.insert(tp::canonicalize(g));
  }
  EXPECT_EQ(s1.size(), c.stage1.size());
  for (const auto& g : c.stage2) {
    EXPECT_TRUE(s1.count(tp::canonicalize(g)));
    EXPECT_TRUE(tp::degree_condition(g));
  }
  for (const auto& g : c.stage3) EXPECT_TRUE(tp::multiplicity_condition(g));
}

TEST(Census, TripleTriangleSurvivesOnlyForThree) {
  const auto c = tp::enumerate_census(3);
  const auto triple = tp::canonicalize(tp::Multigraph(3, {3, 3, 3}));
  EXPECT_TRUE(std::any_of(c.stage3.begin(), c.stage3.end(),
                          [&](const auto& g) { return tp::canonicalize(g) == triple; }));
}

TEST(Canonicalize, InvariantUnderRelabeling) {
  const tp::Multigraph g(4, {2, 1, 0, 1, 2, 1});
  const auto form = tp::canonicalize(g);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    EXPECT_EQ(tp::canonicalize(g.relabeled(perm)), form);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(tp::from_canonical(form).edge_count(), g.edge_count());
}

TEST(Canonicalize, MultiplicityDistinguishes) {
  tp::Multigraph single(2), doubled(2);
  single.add_edge(0, 1);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  EXPECT_NE(tp::canonicalize(single), tp::canonicalize(doubled));
}

TEST(Canonicalize, TripleTriangleFixedByEveryPermutation) {
  const tp::Multigraph g(3, {3, 3, 3});
  std::vector<int> perm{0, 1, 2};
  do {
    EXPECT_EQ(g.relabeled(perm), g);
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(tp::canonical_string(tp::canonicalize(g)), "3:3,3,3");
}

}  // namespace
