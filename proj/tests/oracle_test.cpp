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

#include "support.hpp"
#include "toruspack/closed_form.hpp"
#include "toruspack/oracle.hpp"

namespace {

namespace tp = toruspack;
constexpr double s3 = tp::kSqrt3;

tp::OracleOptions quick(std::uint64_t seed = 3) { return {60, seed, 4}; }

TEST(Oracle, SingleCircleIsHalf) {
  EXPECT_DOUBLE_EQ(tp::maximize_min_distance(1, {0.3, 2.0}).best_radius, 0.5);
  EXPECT_DOUBLE_EQ(tp::maximize_min_distance(1, {0.0, 1.0}).best_radius, 0.5);
}

TEST(Oracle, KnownOptima) {
  EXPECT_NEAR(tp::maximize_min_distance(2, {0.0, 1.0}, quick()).best_radius, std::sqrt(2.0) / 4,
              1e-6);
  EXPECT_NEAR(tp::maximize_min_distance(3, {0.5, s3 / 2}, quick()).best_radius,
              1 / std::sqrt(12.0), 1e-6);
}

TEST(Oracle, ResultIsAValidPackingAtTheReportedRadius) {
  const tp::ModuliPoint m{0.2, 1.4};
  const auto o = tp::maximize_min_distance(4, m, quick());
  const auto p = o.packing(m);
  EXPECT_NEAR(std::min(1.0, tp_test::brute_min_distance(p)), 2 * o.best_radius, 1e-12);
  EXPECT_EQ(p.centers[0], (tp::TorusPoint{0, 0}));
  tp_test::expect_density_ceiling(p);
}

TEST(Oracle, DeterministicForAFixedSeed) {
  const tp::ModuliPoint m{0.1, 1.2};
  const auto a = tp::maximize_min_distance(3, m, quick(8));
  const auto b = tp::maximize_min_distance(3, m, quick(8));
  EXPECT_EQ(a.best_radius, b.best_radius);
  EXPECT_EQ(a.best_centers, b.best_centers);
}

TEST(Oracle, RejectsPointsOutsideTheStrip) {
  EXPECT_THROW(tp::maximize_min_distance(2, {0.8, 1.0}), tp::OutOfModuliStrip);
}

TEST(CompareWithClosedForm, Agreement) {
  for (const auto& [n, m] : {std::pair{3, tp::ModuliPoint{0.0, 2.0}},
                             std::pair{4, tp::ModuliPoint{0.0, 1.0}},
                             std::pair{2, tp::ModuliPoint{0.5, 2.0}}}) {
    const auto r = tp::compare_with_closed_form(n, m, quick());
    EXPECT_LT(r.gap, 1e-4) << n;
    EXPECT_TRUE(r.oracle_within_bound) << n;
    EXPECT_EQ(r.region, tp::classify(n, m));
  }
  EXPECT_NEAR(tp::compare_with_closed_form(2, {0.5, 2.0}, quick()).oracle_radius, 0.5, 1e-12);
}

// The closed form is an upper bound for whatever the search finds.
TEST(CompareWithClosedForm, OracleNeverExceedsFormula) {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= tp::region_count(n); ++k)
      for (const auto& m : tp::sample_region(n, k, 2, 17)) {
        const auto r = tp::compare_with_closed_form(n, m, {30, 17, 2});
        EXPECT_LE(r.oracle_radius, r.formula_radius + 1e-6) << n << " " << m.x << " " << m.y;
      }
}

}  // namespace
