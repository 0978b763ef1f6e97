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

// Optimal radius and one optimal arrangement of 2, 3 or 4 equal circles on
// a standard torus (x, y).

#pragma once

#include <cmath>
#include <vector>

#include "toruspack/lattice.hpp"
#include "toruspack/moduli_regions.hpp"
#include "toruspack/packing.hpp"

namespace toruspack {

struct OptimalSolution {
  int n = 0;
  ModuliPoint m;
  RegionId region;
  double radius = 0.0;
  std::vector<TorusPoint> centers;  // centers[0] is the origin
  double aux_R = 0.0;               // sqrt(16 r^2 - 1)

  Packing packing() const { return {m, centers, radius}; }
};

namespace detail {

inline double radius_in_region(int n, int index, double x, double y) {
  const double s3 = kSqrt3;
  switch (n * 10 + index) {
    case 21:  // circumradius of the triangle 0, v1, v2
      return std::hypot(x, y) * std::hypot(x - 1.0, y) / (4.0 * y);
    case 31:
      return std::hypot(x, y) * std::hypot(x + 0.5, y - s3 / 2.0) /
             (2.0 * (y + s3 * x));
    case 32: {
      const double t = y - std::sqrt(3.0 + 4.0 * y * y - 12.0 * x * x);
      return std::sqrt(9.0 * x * x + t * t) / 6.0;
    }
    case 41:
      // 0/0 at the cusp (1/2, sqrt3/2); both branches tend to 1/4 there.
      if (y - s3 * x > 1e-9)
        return std::hypot(x, y) * std::hypot(x - 0.5, y - s3 / 2.0) /
               (2.0 * (y - s3 * x));
      [[fallthrough]];
    case 42: {
      const double a = y * s3 - x, b = (x - 1.0) * s3 + y;
      const double A2 = 2.0 * a * a - b * b + 3.0;
      const double B2 = (x * x + y * y) *
                        ((x - 1.5) * (x - 1.5) + (y - s3 / 2.0) * (y - s3 / 2.0));
      return std::sqrt(A2 - std::sqrt(std::max(0.0, A2 * A2 - 16.0 * B2))) /
             (4.0 * std::sqrt(2.0));
    }
    case 43: {
      const double A3 = 9.0 + 5.0 * y * y - (2.0 * x - 1.0) * (2.0 * x - 1.0);
      const double B3 = ((x - 2.0) * (x - 2.0) + y * y) * ((x + 1.0) * (x + 1.0) + y * y);
      return std::sqrt(A3 - std::sqrt(std::max(0.0, A3 * A3 - 16.0 * B3))) /
             (8.0 * std::sqrt(2.0));
    }
    default:
      return 0.5;
  }
}

// n layers of self-tangent circles, each resting in the two hollows of the
// one below; the top layer reaches the first one's translate by v2 only on
// the self-tangency curve.
inline std::vector<TorusPoint> layered_centers(int n, const ModuliPoint& m) {
  std::vector<TorusPoint> out;
  for (int k = 0; k < n; ++k) {
    const TorusPoint p{0.5 * (k % 2), k * kSqrt3 / 2.0};
    out.push_back(k == 0 ? p : canonical(p, m));
  }
  return out;
}

}  // namespace detail

// Radius evaluated on the given branch, without classifying. Only meaningful
// on the closure of that region.
inline double branch_radius(int n, int index, const ModuliPoint& m) {
  require_supported_n(n);
  return detail::radius_in_region(n, index, m.x, m.y);
}

inline double optimal_radius(int n, const ModuliPoint& m) {
  const RegionId id = classify(n, m);
  return branch_radius(n, id.index, m);
}

inline OptimalSolution optimal_centers(int n, const ModuliPoint& m) {
  OptimalSolution s;
  s.n = n;
  s.m = m;
  s.region = classify(n, m);
  s.radius = branch_radius(n, s.region.index, m);
  s.aux_R = std::sqrt(std::max(0.0, 16.0 * s.radius * s.radius - 1.0));
  const double R = s.aux_R, s3 = kSqrt3;
  std::vector<TorusPoint> raw;
  if (s.region.is_final()) {
    s.centers = detail::layered_centers(n, m);
    return s;
  }
  switch (n * 10 + s.region.index) {
    case 21:
      raw = {{0, 0}, {0.5, R / 2.0}};
      break;
    case 31:
      raw = {{0, 0}, {0.5, -R / 2.0}, {(s3 * R + 1.0) / 4.0, (s3 - R) / 4.0}};
      break;
    case 32:
      raw = {{0, 0}, {0.5, -R / 2.0}, {0.5, R / 2.0}};
      break;
    case 41:
    case 42:
      raw = {{0, 0},
             {0.5, R / 2.0},
             {(1.0 - s3 * R) / 4.0, (R + s3) / 4.0},
             {(3.0 - s3 * R) / 4.0, (3.0 * R + s3) / 4.0}};
      break;
    case 43:
      raw = {{0, 0}, {0.5, R / 2.0}, {0, R}, {0.5, 1.5 * R}};
      break;
    default:
      break;
  }
  s.centers.push_back(raw.front());
  for (std::size_t k = 1; k < raw.size(); ++k) s.centers.push_back(canonical(raw[k], m));
  return s;
}

// Number of tangencies (loops included) in the arrangement returned by
// optimal_centers.
inline std::size_t tangency_census(int n, const ModuliPoint& m,
                                   double tol = kTangencyTol) {
  const auto s = optimal_centers(n, m);
  return extract_graph(s.packing(), tol).edge_count();
}

}  // namespace toruspack
