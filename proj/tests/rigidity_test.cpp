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

#include <cmath>

#include "toruspack/closed_form.hpp"
#include "toruspack/rigidity.hpp"

namespace {

namespace tp = toruspack;
constexpr double s3 = tp::kSqrt3;

tp::StrutFramework framework_of(const tp::Packing& p) {
  return tp::build_framework(p, tp::extract_graph(p));
}

TEST(BuildFramework, SquareTorusPair) {
  const auto f = framework_of(tp::optimal_centers(2, {0.0, 1.0}).packing());
  EXPECT_EQ(f.vertex_count(), 2);
  ASSERT_EQ(f.struts.size(), 4u);
  for (const auto& s : f.struts) {
    EXPECT_NEAR(std::abs(s.e.x), 0.5, 1e-12);
    EXPECT_NEAR(std::abs(s.e.y), 0.5, 1e-12);
  }
}

TEST(BuildFramework, LayeredPackingDropsLoops) {
  const tp::ModuliPoint m{0.0, s3 + 1.0};
  const auto s = tp::optimal_centers(3, m);
  EXPECT_DOUBLE_EQ(s.radius, 0.5);
  const auto g = tp::extract_graph(s.packing());
  EXPECT_GT(g.loop_count(), 0u);
  EXPECT_EQ(tp::build_framework(s.packing(), g).struts.size(), 5u);
}

TEST(BuildFramework, NoEdgesNoStruts) {
  const tp::Packing p{{0.0, 1.0}, {{0, 0}, {0.5, 0.5}}, 0.1};
  EXPECT_TRUE(framework_of(p).struts.empty());
}

TEST(Flex, SquareTorusOptimumIsRigidWithUniformStress) {
  const auto f = framework_of(tp::optimal_centers(2, {0.0, 1.0}).packing());
  EXPECT_FALSE(tp::find_nontrivial_flex(f).has_value());
  const auto w = tp::find_proper_stress(f);
  ASSERT_TRUE(w.has_value());
  ASSERT_EQ(w->weights.size(), 4u);
  for (double x : w->weights) EXPECT_LE(x, -1.0 + 1e-12);
  EXPECT_LT(tp::equilibrium_residual(f, *w), 1e-9);
}

TEST(Flex, HorizontalPairSlidesVertically) {
  const tp::Packing p{{0.0, 1.0}, {{0, 0}, {0.5, 0}}, 0.25};
  const auto f = framework_of(p);
  ASSERT_EQ(f.struts.size(), 2u);
  const auto flex = tp::find_nontrivial_flex(f);
  ASSERT_TRUE(flex.has_value());
  EXPECT_TRUE(tp::is_flex(f, *flex));
  EXPECT_NEAR(flex->velocity[1].x, 0.0, 1e-12);
  EXPECT_GT(std::abs(flex->velocity[1].y), 0.5);
  // The two struts point in opposite directions, so equal compressions
  // balance: a proper stress exists alongside the flex.
  const auto w = tp::find_proper_stress(f);
  ASSERT_TRUE(w.has_value());
  EXPECT_LT(tp::equilibrium_residual(f, *w), 1e-9);
  EXPECT_EQ(tp::classify_framework(f).verdict, tp::PackingClass::free_circle);
}

TEST(Flex, TranslatedWitnessStillFlexes) {
  const tp::Packing p{{0.0, 1.0}, {{0, 0}, {0.5, 0}}, 0.25};
  const auto f = framework_of(p);
  auto flex = *tp::find_nontrivial_flex(f);
  for (auto& v : flex.velocity) v += tp::Vec2{0.3, -0.7};
  EXPECT_TRUE(tp::is_flex(f, flex));
}

TEST(Stress, TriangularClosePackingOfThree) {
  const auto f = framework_of(tp::optimal_centers(3, {0.5, s3 / 2}).packing());
  EXPECT_EQ(f.struts.size(), 9u);
  const auto w = tp::find_proper_stress(f);
  ASSERT_TRUE(w.has_value());
  EXPECT_LT(tp::equilibrium_residual(f, *w), 1e-9);
  EXPECT_FALSE(tp::find_nontrivial_flex(f).has_value());
}

TEST(ClassifyPacking, InteriorOptimaAreRigid) {
  EXPECT_EQ(tp::classify_packing(tp::optimal_centers(4, {0.25, 1.3}).packing()).verdict,
            tp::PackingClass::rigid_lmd);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < tp::region_count(n); ++k)
      for (const auto& m : tp::sample_region(n, k, 5, 21))
        EXPECT_EQ(tp::classify_packing(tp::optimal_centers(n, m).packing()).verdict,
                  tp::PackingClass::rigid_lmd)
            << n << " (" << m.x << ", " << m.y << ")";
}

TEST(ClassifyPacking, UntouchedCircleIsFree) {
  const tp::Packing p{{0.0, 1.0}, {{0, 0}, {0.5, 0.5}}, 0.2};
  const auto v = tp::classify_packing(p);
  EXPECT_EQ(v.verdict, tp::PackingClass::free_circle);
  EXPECT_EQ(v.free_vertex, 0);
  EXPECT_EQ(tp::to_string(v.verdict), "free-circle");
}

// Perturbing the input far below the rationalization grid leaves the
// verdict unchanged.
TEST(ClassifyPacking, StableUnderTinyPerturbation) {
  auto p = tp::optimal_centers(3, {0.1, 1.5}).packing();
  const auto base = tp::classify_packing(p).verdict;
  p.centers[1].u += 1e-14;
  EXPECT_EQ(tp::classify_packing(p).verdict, base);
}

}  // namespace
