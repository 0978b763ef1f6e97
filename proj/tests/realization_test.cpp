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

#include "support.hpp"
#include "toruspack/catalog.hpp"
#include "toruspack/oracle.hpp"
#include "toruspack/rigidity.hpp"

namespace {

namespace tp = toruspack;

std::vector<tp::RealizationSample> realize(const char* name, int attempts,
                                           bool window = true) {
  const auto e = tp::named_embedding(name);
  EXPECT_TRUE(e.has_value()) << name;
  if (!e) return {};
  return tp::realize_embedding(*e, {attempts, 5, window}, name);
}

// Samples are checked independently: equal edge lengths by brute force,
// and no pair of circles closer than the common length.
void check_samples(const std::vector<tp::RealizationSample>& samples, std::size_t edges) {
  for (const auto& s : samples) {
    const auto p = s.packing();
    EXPECT_TRUE(tp::in_moduli_strip(s.m));
    EXPECT_LT(s.residual, 1e-10);
    EXPECT_NEAR(tp_test::brute_min_distance(p), s.length, 1e-7);
    EXPECT_EQ(tp_test::brute_tangency_count(p, 1e-6), edges);
    tp_test::expect_density_ceiling(p);
  }
}

TEST(RealizeEmbedding, OptimalGraphHasAFamily) {
  const auto samples = realize("ECG1-1", 60);
  ASSERT_GE(samples.size(), 5u);
  check_samples(samples, 5);
  bool in_r1 = false;
  for (const auto& s : samples) in_r1 |= tp::classify(3, s.m).index == 1;
  EXPECT_TRUE(in_r1);
}

TEST(RealizeEmbedding, CongruenceEliminatedGraphHasNone) {
  EXPECT_TRUE(realize("ECG10-1", 150, false).empty());
}

TEST(RealizeEmbedding, FlexibleGraphIsNeverRigid) {
  const auto samples = realize("ECG2-2", 60);
  ASSERT_FALSE(samples.empty());
  check_samples(samples, 6);
  for (std::size_t k = 0; k < std::min<std::size_t>(samples.size(), 6); ++k)
    EXPECT_NE(tp::classify_packing(samples[k].packing(), 1e-7).verdict,
              tp::PackingClass::rigid_lmd);
}

TEST(RealizeEmbedding, DeterministicForAFixedSeed) {
  const auto a = realize("ECG1-2", 20), b = realize("ECG1-2", 20);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].positions, b[k].positions);
}

}  // namespace
