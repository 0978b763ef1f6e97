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

#include <numeric>
#include <random>

#include "toruspack/census.hpp"
#include "toruspack/embedding.hpp"

namespace {

namespace tp = toruspack;

tp::Multigraph theta() { return tp::Multigraph(2, {3}); }

TEST(TraceFaces, ThetaGraphPlanarRotation) {
  const auto e = tp::make_embedding(theta(), {{{0, 2, 4}, {1, 5, 3}}});
  EXPECT_EQ(e.faces.size(), 3u);
  EXPECT_EQ(e.euler(), 2);
  EXPECT_EQ(e.face_vector(), (std::vector<int>{2, 2, 2}));
}

TEST(TraceFaces, ThetaGraphToroidalRotation) {
  const auto e = tp::make_embedding(theta(), {{{0, 2, 4}, {1, 3, 5}}});
  EXPECT_EQ(e.faces.size(), 1u);
  EXPECT_EQ(e.euler(), 0);
  EXPECT_EQ(e.faces[0].size(), 6u);
}

TEST(MakeEmbedding, RejectsMismatchedRotation) {
  EXPECT_THROW(tp::make_embedding(theta(), {{{0, 2}, {1, 3, 5}}}), tp::Error);
  EXPECT_THROW(tp::make_embedding(theta(), {{{1, 2, 4}, {0, 3, 5}}}), tp::Error);
}

// Random rotation systems: every dart lies in exactly one face, so face
// lengths sum to 2E, and chi is even and at most 2.
TEST(TraceFaces, RandomRotationsSatisfyCountingIdentities) {
  std::mt19937_64 rng(11);
  const tp::Multigraph g(4, {2, 1, 1, 1, 2, 2});
  const auto darts = tp::darts_of(g);
  for (int trial = 0; trial < 200; ++trial) {
    tp::RotationSystem rot{darts.darts_at()};
    for (auto& cyc : rot.cyclic) std::shuffle(cyc.begin(), cyc.end(), rng);
    const auto e = tp::make_embedding(g, rot);
    std::size_t total = 0;
    std::vector<int> hits(static_cast<std::size_t>(darts.dart_count()), 0);
    for (const auto& f : e.faces) {
      total += f.size();
      for (int d : f) ++hits[static_cast<std::size_t>(d)];
    }
    EXPECT_EQ(total, static_cast<std::size_t>(2 * g.edge_count()));
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_LE(e.euler(), 2);
    EXPECT_EQ(e.euler() % 2, 0);
  }
}

TEST(MapCode, InvariantUnderReversalAndDistinguishesMaps) {
  const auto planar = tp::make_embedding(theta(), {{{0, 2, 4}, {1, 5, 3}}});
  const auto torus = tp::make_embedding(theta(), {{{0, 2, 4}, {1, 3, 5}}});
  const auto mirrored = tp::make_embedding(theta(), planar.rotation.reversed());
  EXPECT_EQ(planar.canonical_form, mirrored.canonical_form);
  EXPECT_NE(planar.canonical_form, torus.canonical_form);
}

TEST(EnumerateToroidal, ThetaHasOneDigonFreeToroidalMap) {
  const auto r = tp::enumerate_toroidal(theta());
  EXPECT_EQ(r.rotation_systems, 4u);
  ASSERT_EQ(r.embeddings.size(), 1u);
  EXPECT_EQ(r.embeddings[0].euler(), 0);
}

TEST(EnumerateToroidal, OrbitSizesAccountForEveryLabeledSystem) {
  for (const auto& g : {tp::Multigraph(3, {2, 2, 1}), tp::Multigraph(3, {3, 3, 3}),
                        tp::Multigraph(4, {2, 1, 1, 1, 1, 2})}) {
    const auto r = tp::enumerate_toroidal(g);
    ASSERT_EQ(r.orbit_sizes.size(), r.embeddings.size());
    EXPECT_EQ(std::accumulate(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::uint64_t{0}),
              r.toroidal_labeled);
    for (const auto& e : r.embeddings) EXPECT_EQ(e.euler(), 0);
  }
}

TEST(EnumerateToroidal, ThreeCircleTotalIsSix) {
  std::size_t total = 0;
  for (const auto& g : tp::enumerate_census(3).stage3)
    total += tp::enumerate_toroidal(g).embeddings.size();
  EXPECT_EQ(total, 6u);
}

// Face walks sum to zero and the edge classes span Z^2: some pair of
// classes has determinant +-1 up to a gcd argument, checked via the gcd of
// all 2x2 minors.
TEST(AssignVoltages, FacesCloseAndClassesGenerate) {
  for (const auto& g : tp::enumerate_census(3).stage3)
    for (const auto& e : tp::enumerate_toroidal(g).embeddings) {
      const auto volt = tp::assign_voltages(e);
      for (const auto& f : e.faces) {
        tp::Voltage sum{0, 0};
        for (int d : f) {
          const auto v = tp::dart_voltage(volt, d);
          sum[0] += v[0];
          sum[1] += v[1];
        }
        EXPECT_EQ(sum, (tp::Voltage{0, 0}));
      }
      std::int64_t gcd = 0;
      for (std::size_t a = 0; a < volt.size(); ++a)
        for (std::size_t b = a + 1; b < volt.size(); ++b)
          gcd = std::gcd(gcd, volt[a][0] * volt[b][1] - volt[a][1] * volt[b][0]);
      EXPECT_EQ(gcd, 1);
    }
}

TEST(AssignVoltages, RejectsPlanarMaps) {
  EXPECT_THROW(tp::assign_voltages(tp::make_embedding(theta(), {{{0, 2, 4}, {1, 5, 3}}})),
               tp::Error);
}

}  // namespace
