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
#include <random>

#include "support.hpp"
#include "toruspack/errors.hpp"
#include "toruspack/lattice.hpp"

namespace {

namespace tp = toruspack;
using tp_test::brute_distance;

TEST(ReduceToStandardBasis, SquareLatticeScalesToUnitSquare) {
  const auto sf = tp::reduce_to_standard_basis({{2, 0}, {0, 2}});
  EXPECT_DOUBLE_EQ(sf.point.x, 0.0);
  EXPECT_DOUBLE_EQ(sf.point.y, 1.0);
  EXPECT_DOUBLE_EQ(sf.transform.scale, 0.5);
}

TEST(ReduceToStandardBasis, ShearThenReflect) {
  const auto sf = tp::reduce_to_standard_basis({{1, 0}, {0.7, 1.0}});
  EXPECT_NEAR(sf.point.x, 0.3, 1e-15);
  EXPECT_NEAR(sf.point.y, 1.0, 1e-15);
  EXPECT_TRUE(sf.transform.reflected);
}

TEST(ReduceToStandardBasis, TriangularIsAlreadyStandard) {
  const auto sf = tp::reduce_to_standard_basis({{1, 0}, {0.5, tp::kSqrt3 / 2}});
  EXPECT_DOUBLE_EQ(sf.point.x, 0.5);
  EXPECT_DOUBLE_EQ(sf.point.y, tp::kSqrt3 / 2);
  EXPECT_DOUBLE_EQ(sf.transform.scale, 1.0);
  EXPECT_FALSE(sf.transform.reflected);
  // The two generators tie in length, so either may come first; the
  // matrix rows must still map onto the standard basis.
  const tp::Vec2 in[2] = {{1, 0}, {0.5, tp::kSqrt3 / 2}};
  const tp::Vec2 want[2] = {{1, 0}, {sf.point.x, sf.point.y}};
  for (int r = 0; r < 2; ++r) {
    const auto& row = sf.transform.matrix[static_cast<std::size_t>(r)];
    const tp::Vec2 v = sf.transform.apply(static_cast<double>(row[0]) * in[0] +
                                          static_cast<double>(row[1]) * in[1]);
    EXPECT_NEAR(v.x, want[r].x, 1e-12);
    EXPECT_NEAR(v.y, want[r].y, 1e-12);
  }
}

TEST(ReduceToStandardBasis, DependentVectorsThrow) {
  EXPECT_THROW(tp::reduce_to_standard_basis({{1, 2}, {2, 4}}), tp::DegenerateLattice);
  EXPECT_THROW(tp::reduce_to_standard_basis({{0, 0}, {0, 1}}), tp::DegenerateLattice);
}

// The transform must carry the input lattice onto the standard one: both
// input generators land on integer points of the reduced lattice, and the
// covolume scales by scale^2.
TEST(ReduceToStandardBasis, RandomBasesLandInStripAndMapLattice) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 500; ++trial) {
    const tp::Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)};
    if (std::abs(tp::cross(a, b)) < 1e-3) continue;
    const auto sf = tp::reduce_to_standard_basis({a, b});
    ASSERT_TRUE(tp::in_moduli_strip(sf.point, 1e-9)) << sf.point.x << " " << sf.point.y;
    for (const auto& v : {a, b}) {
      const auto c = tp::lattice_coordinates(sf.transform.apply(v), sf.point);
      EXPECT_NEAR(c[0], std::round(c[0]), 1e-8);
      EXPECT_NEAR(c[1], std::round(c[1]), 1e-8);
    }
    const double s = sf.transform.scale;
    EXPECT_NEAR(std::abs(tp::cross(a, b)) * s * s, sf.point.y, 1e-9);
  }
}

TEST(TorusDistance, LiftIsAtDistanceZero) {
  EXPECT_NEAR(tp::torus_distance({0, 0}, {1, 0}, {0, 1}), 0.0, 1e-15);
}

TEST(TorusDistance, SquareCenterAndWraparound) {
  EXPECT_NEAR(tp::torus_distance({0, 0}, {0.5, 0.5}, {0, 1}), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(tp::torus_distance({0, 0}, {0.9, 0}, {0, 1}), 0.1, 1e-15);
}

TEST(TorusDistance, AgreesWithBruteForceWindow) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = 0.5 * u(rng);
    const tp::ModuliPoint m{x, std::sqrt(1 - x * x) + 3.0 * u(rng)};
    const tp::TorusPoint p{4 * u(rng) - 2, 4 * u(rng) - 2}, q{4 * u(rng) - 2, 4 * u(rng) - 2};
    double want = brute_distance(p.vec(), q.vec(), m, 12);
    if (!std::isfinite(want)) want = 0.0;
    EXPECT_NEAR(tp::torus_distance(p, q, m), want, 1e-12);
  }
}

TEST(TangencyDisplacements, SelfTangencyCountedOnce) {
  const auto d = tp::tangency_displacements({0, 0}, {0, 0}, {0, 2}, 0.5);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].a, 1);
  EXPECT_EQ(d[0].b, 0);
}

TEST(TangencyDisplacements, FourTranslatesOnSquareTorus) {
  const auto d = tp::tangency_displacements({0, 0}, {0.5, 0.5}, {0, 1}, std::sqrt(2.0) / 4);
  EXPECT_EQ(d.size(), 4u);
  for (const auto& t : d) EXPECT_NEAR(tp::norm(t.vec), std::sqrt(0.5), 1e-12);
}

TEST(TangencyDisplacements, OverlapThrows) {
  EXPECT_THROW(tp::tangency_displacements({0, 0}, {0.5, 0.2}, {0, 1}, std::sqrt(2.0) / 4),
               tp::OverlapDetected);
}

TEST(FundamentalDomain, AreaIsHeight) {
  EXPECT_DOUBLE_EQ(tp::fundamental_domain_area({0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(tp::fundamental_domain_area({0.5, tp::kSqrt3 / 2}), tp::kSqrt3 / 2);
  EXPECT_DOUBLE_EQ(tp::fundamental_domain_area({0.3, 2.0}), 2.0);
}

TEST(Canonical, RepresentativeInHalfOpenCell) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const tp::ModuliPoint m{0.3, 1.4};
  for (int k = 0; k < 1000; ++k) {
    const tp::TorusPoint p{u(rng), u(rng)};
    const auto c = tp::canonical(p, m);
    const auto t = tp::lattice_coordinates(c.vec(), m);
    EXPECT_GE(t[0], 0.0);
    EXPECT_LT(t[0], 1.0);
    EXPECT_GE(t[1], 0.0);
    EXPECT_LT(t[1], 1.0);
    EXPECT_NEAR(tp::torus_distance(p, c, m), 0.0, 1e-12);
  }
}

TEST(ModuliStrip, RejectsPointsOutside) {
  EXPECT_TRUE(tp::in_moduli_strip({0.5, tp::kSqrt3 / 2}));
  EXPECT_FALSE(tp::in_moduli_strip({0.6, 1.0}));
  EXPECT_FALSE(tp::in_moduli_strip({0.2, 0.9}));
  EXPECT_FALSE(tp::in_moduli_strip({-0.1, 1.0}));
  EXPECT_THROW(tp::require_moduli_strip({0.0, 0.5}), tp::OutOfModuliStrip);
}

}  // namespace
