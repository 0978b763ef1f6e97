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

// Regions of the standard strip on which the optimal packing of n equal
// circles has a single closed form. Region k of n is bounded below by curve
// k-1 (inclusive) and above by curve k (exclusive); curve 0 is the unit
// circle and the last region is unbounded above.
//
//   n = 2:  sqrt(1-(x-1/2)^2) + sqrt3/2
//   n = 3:  sqrt(1/3-x^2) + sqrt3/3,  sqrt(1-x^2) + sqrt3
//   n = 4:  (2-x)/sqrt3,  sqrt(1/3-(x-1/2)^2) + sqrt3/2,
//           sqrt(1-(x-1/2)^2) + 3 sqrt3/2
//
// The last curve for each n is where one circle first stops touching the
// one above it across the lattice; above it every circle has radius 1/2.

#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "toruspack/errors.hpp"
#include "toruspack/lattice.hpp"
#include "toruspack/random.hpp"

namespace toruspack {

// Points within this height of a separating curve count as on it, so they
// belong to the region above (regions are closed below, open above).
inline constexpr double kBoundaryTol = 1e-7;

struct BoundaryFlags {
  bool lower = false;
  bool upper = false;
  bool left = false;
  bool right = false;

  bool any() const { return lower || upper || left || right; }
  friend bool operator==(const BoundaryFlags&, const BoundaryFlags&) = default;
};

struct RegionId {
  int n = 0;
  int index = 0;  // 1-based
  BoundaryFlags boundary;

  std::string name() const {
    return "R" + std::to_string(index) + "_" + std::to_string(n);
  }
  // The region above the self-tangency curve, where the radius is 1/2.
  bool is_final() const { return index == n; }
  friend bool operator==(const RegionId&, const RegionId&) = default;
};

inline void require_supported_n(int n) {
  if (n < 2 || n > 4) {
    throw UnsupportedN("closed forms exist for n = 2, 3, 4 only, got " +
                       std::to_string(n));
  }
}

// Number of regions for n (one more than the number of separating curves).
inline int region_count(int n) {
  require_supported_n(n);
  return n;
}

// Value at x of separating curve k (1 <= k < n) between regions k and k+1;
// k = 0 is the strip floor sqrt(1-x^2).
inline double region_curve(int n, int k, double x) {
  require_supported_n(n);
  if (k == 0) return std::sqrt(std::max(0.0, 1.0 - x * x));
  const double h = x - 0.5;
  switch (n) {
    case 2:
      if (k == 1) return std::sqrt(1.0 - h * h) + kSqrt3 / 2.0;
      break;
    case 3:
      if (k == 1) return std::sqrt(1.0 / 3.0 - x * x) + kSqrt3 / 3.0;
      if (k == 2) return std::sqrt(1.0 - x * x) + kSqrt3;
      break;
    case 4:
      if (k == 1) return (2.0 - x) / kSqrt3;
      if (k == 2) return std::sqrt(1.0 / 3.0 - h * h) + kSqrt3 / 2.0;
      if (k == 3) return std::sqrt(1.0 - h * h) + 1.5 * kSqrt3;
      break;
    default:
      break;
  }
  throw Error("no separating curve " + std::to_string(k) + " for n = " +
              std::to_string(n));
}

inline RegionId classify(int n, const ModuliPoint& m) {
  require_supported_n(n);
  require_moduli_strip(m);
  RegionId id;
  id.n = n;
  id.index = n;
  // The floor belongs to region 1 even where curve 1 meets it (the cusp at
  // (1/2, sqrt3/2) for n = 3 and 4).
  const bool on_floor = std::abs(m.y - region_curve(n, 0, m.x)) <= kBoundaryTol;
  for (int k = 1; k < n; ++k) {
    if (on_floor || m.y < region_curve(n, k, m.x) - kBoundaryTol) {
      id.index = k;
      break;
    }
  }
  const double lo = region_curve(n, id.index - 1, m.x);
  id.boundary.lower = std::abs(m.y - lo) <= kBoundaryTol;
  if (!id.is_final()) {
    id.boundary.upper =
        std::abs(m.y - region_curve(n, id.index, m.x)) <= kBoundaryTol;
  }
  id.boundary.left = std::abs(m.x) <= kBoundaryTol;
  id.boundary.right = std::abs(m.x - 0.5) <= kBoundaryTol;
  return id;
}

// Moduli point at which the n-layer self-tangent arrangement closes up with
// its single cross-lattice tangency at angle alpha.
inline ModuliPoint self_tangent_boundary(int n, double alpha) {
  require_supported_n(n);
  if (!(alpha >= kPi / 3.0 - 1e-15 && alpha <= kPi / 2.0 + 1e-15)) {
    std::ostringstream os;
    os << "alpha = " << alpha << " is outside [pi/3, pi/2]";
    throw AlphaOutOfRange(os.str());
  }
  const double x = (n % 2 == 0) ? 0.5 - std::cos(alpha) : std::cos(alpha);
  const double y = (n - 1) / 2.0 * kSqrt3 + std::sin(alpha);
  return {std::max(0.0, x), y};
}

// Height of the self-tangency curve over x.
inline double self_tangent_height(int n, double x) {
  return region_curve(n, n - 1, x);
}

inline bool in_free_region(int n, const ModuliPoint& m) {
  require_supported_n(n);
  require_moduli_strip(m);
  return m.y > self_tangent_height(n, m.x);
}

// Standard-form shapes of the tori on which n circles can sit in triangular
// close packing: the index-n sublattices of the triangular lattice.
inline std::vector<ModuliPoint> triangular_close_packing_points(int n) {
  const Vec2 e1{1.0, 0.0}, e2{0.5, kSqrt3 / 2.0};
  std::map<std::pair<long long, long long>, ModuliPoint> seen;
  for (int a = 1; a <= n; ++a) {
    if (n % a) continue;
    const int d = n / a;
    for (int b = 0; b < a; ++b) {
      const auto sf = reduce_to_standard_basis({a * e1, b * e1 + d * e2});
      const auto key = std::make_pair(std::llround(sf.point.x * 1e9), std::llround(sf.point.y * 1e9));
      seen.emplace(key, ModuliPoint{sf.point.x + 0.0, sf.point.y});  // no -0
    }
  }
  std::vector<ModuliPoint> out;
  for (const auto& [k, v] : seen) out.push_back(v);
  return out;
}

// Seeded moduli points strictly inside region k.
inline std::vector<ModuliPoint> sample_region(int n, int k, int count, std::uint64_t seed) {
  auto rng = seeded_rng(seed, static_cast<std::uint64_t>(n * 100 + k));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ModuliPoint> out;
  const bool last = k == region_count(n);
  while (static_cast<int>(out.size()) < count) {
    const double x = 0.5 * unit(rng);
    const double lo = region_curve(n, k - 1, x);
    const double hi = last ? lo + 1.5 : region_curve(n, k, x);
    if (hi - lo < 1e-4) continue;
    const ModuliPoint m{x, lo + (hi - lo) * (0.02 + 0.96 * unit(rng))};
    const RegionId id = classify(n, m);
    if (id.index != k || id.boundary.any()) continue;
    out.push_back(m);
  }
  return out;
}

}  // namespace toruspack
