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

// Shared test helpers. Oracles here are deliberately naive: brute force over
// a fixed window rather than the library's exact translate enumeration.

#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "toruspack/lattice.hpp"
#include "toruspack/packing.hpp"

namespace tp_test {

namespace tp = toruspack;

inline constexpr double kCloseDensity = 0.9068996821171089;  // pi / sqrt(12)

// Every packing a test builds should respect the planar packing ceiling.
inline void expect_density_ceiling(const tp::Packing& p) {
  const double d = static_cast<double>(p.size()) * tp::kPi * p.radius * p.radius / p.m.y;
  EXPECT_LE(d, kCloseDensity + 1e-12) << "radius " << p.radius << " on (" << p.m.x << ", "
                                      << p.m.y << ")";
}

// Shortest |q - p + a v1 + b v2| over |a|, |b| <= window.
inline double brute_distance(tp::Vec2 p, tp::Vec2 q, const tp::ModuliPoint& m,
                             int window = 6) {
  double best = std::numeric_limits<double>::infinity();
  for (int a = -window; a <= window; ++a)
    for (int b = -window; b <= window; ++b) {
      const double dx = q.x - p.x + a + b * m.x, dy = q.y - p.y + b * m.y;
      if (a == 0 && b == 0 && dx == 0.0 && dy == 0.0) continue;
      best = std::min(best, std::hypot(dx, dy));
    }
  return best;
}

// Smallest distance between distinct circles or a circle and its own
// translate, by brute force.
inline double brute_min_distance(const tp::Packing& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j)
      best = std::min(best, brute_distance(p.centers[i].vec(), p.centers[j].vec(), p.m));
  return best;
}

// Tangent pairs (i <= j, loops counted once per +/- pair) by brute force.
inline std::size_t brute_tangency_count(const tp::Packing& p, double tol = 1e-9,
                                        int window = 6) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j)
      for (int a = -window; a <= window; ++a)
        for (int b = -window; b <= window; ++b) {
          if (i == j && (b < 0 || (b == 0 && a <= 0))) continue;
          const tp::Vec2 d = p.centers[j].vec() - p.centers[i].vec() + p.m.lattice(a, b);
          if (std::abs(tp::norm(d) - 2.0 * p.radius) <= tol) ++count;
        }
  return count;
}

}  // namespace tp_test
