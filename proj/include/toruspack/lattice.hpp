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

// Flat tori: lattice bases, reduction to the standard strip, and the
// toroidal metric.
//
// A flat torus is the plane modulo the lattice spanned by two independent
// vectors. Up to similarity and change of basis every such lattice has a
// basis <1,0>, <x,y> with x^2 + y^2 >= 1, y > 0 and 0 <= x <= 1/2; the pair
// (x, y) is a ModuliPoint. Everything downstream works in that normal form.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <vector>

#include "toruspack/errors.hpp"

namespace toruspack {

inline constexpr double kSqrt3 = std::numbers::sqrt3;
inline constexpr double kPi = std::numbers::pi;

// Default absolute tolerance on distances when deciding tangency.
inline constexpr double kTangencyTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double s, const Vec2& a) {
    return {s * a.x, s * a.y};
  }
  friend constexpr Vec2 operator*(const Vec2& a, double s) { return s * a; }
  friend constexpr Vec2 operator/(const Vec2& a, double s) {
    return {a.x / s, a.y / s};
  }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) {
  return a.x * b.x + a.y * b.y;
}
// Scalar cross product a.x*b.y - a.y*b.x.
constexpr double cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

struct LatticeBasis {
  Vec2 v1;
  Vec2 v2;
};

// Tolerance used when validating that a point lies in the moduli strip.
inline constexpr double kStripTol = 1e-12;

struct ModuliPoint {
  double x = 0.0;
  double y = 1.0;

  Vec2 v1() const { return {1.0, 0.0}; }
  Vec2 v2() const { return {x, y}; }
  Vec2 lattice(std::int64_t a, std::int64_t b) const {
    return {static_cast<double>(a) + static_cast<double>(b) * x,
            static_cast<double>(b) * y};
  }
  friend bool operator==(const ModuliPoint&, const ModuliPoint&) = default;
};

inline bool in_moduli_strip(const ModuliPoint& m, double tol = kStripTol) {
  return std::isfinite(m.x) && std::isfinite(m.y) && m.y > 0.0 &&
         m.x >= -tol && m.x <= 0.5 + tol &&
         m.x * m.x + m.y * m.y >= 1.0 - tol;
}

inline void require_moduli_strip(const ModuliPoint& m) {
  if (!in_moduli_strip(m)) {
    std::ostringstream os;
    os << "moduli point (" << m.x << ", " << m.y
       << ") is outside the strip x^2+y^2>=1, y>0, 0<=x<=1/2";
    throw OutOfModuliStrip(os.str());
  }
}

// A point of the torus, stored as a plane representative.
struct TorusPoint {
  double u = 0.0;
  double w = 0.0;

  Vec2 vec() const { return {u, w}; }
  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
};

// Lattice coordinates (t1, t2) with p = t1*v1 + t2*v2.
inline std::array<double, 2> lattice_coordinates(const Vec2& p,
                                                 const ModuliPoint& m) {
  const double t2 = p.y / m.y;
  return {p.x - t2 * m.x, t2};
}

// Representative with lattice coordinates in [0, 1).
inline TorusPoint canonical(const TorusPoint& p, const ModuliPoint& m) {
  auto [t1, t2] = lattice_coordinates(p.vec(), m);
  t1 -= std::floor(t1);
  t2 -= std::floor(t2);
  if (t1 >= 1.0) t1 = 0.0;
  if (t2 >= 1.0) t2 = 0.0;
  return {t1 + t2 * m.x, t2 * m.y};
}

// The lattice element a*v1 + b*v2 joining two chosen representatives.
struct Displacement {
  std::int64_t a = 0;
  std::int64_t b = 0;
  Vec2 vec;  // q + a*v1 + b*v2 - p for the representatives it was built from

  friend bool operator==(const Displacement& l, const Displacement& r) {
    return l.a == r.a && l.b == r.b;
  }
};

// Record of how an input basis maps onto the standard one. After the
// integer change of basis `matrix` (rows give the reduced vectors in terms of
// the input ones), a rotation by `rotation` radians, a scaling by `scale`
// and, if `reflected`, the reflection (u, w) -> (-u, w), the input lattice
// becomes the one spanned by <1,0> and <x,y>.
struct BasisTransform {
  double scale = 1.0;
  double rotation = 0.0;
  std::array<std::array<std::int64_t, 2>, 2> matrix{{{1, 0}, {0, 1}}};
  bool reflected = false;

  // Image of a plane point of the input torus in standard coordinates.
  Vec2 apply(const Vec2& p) const {
    const double c = std::cos(rotation), s = std::sin(rotation);
    Vec2 q{scale * (c * p.x - s * p.y), scale * (s * p.x + c * p.y)};
    if (reflected) q.x = -q.x;
    return q;
  }
};

struct StandardForm {
  ModuliPoint point;
  BasisTransform transform;
};

// Lagrange-Gauss reduction followed by scaling, rotation and the unoriented
// fold 0 <= x <= 1/2.
inline StandardForm reduce_to_standard_basis(const LatticeBasis& basis) {
  Vec2 a = basis.v1, b = basis.v2;
  const double scale_ref = std::max(dot(a, a), dot(b, b));
  if (!(std::abs(cross(a, b)) > 1e-12 * scale_ref) || !std::isfinite(scale_ref)) {
    throw DegenerateLattice("basis vectors are linearly dependent");
  }
  // Rows of m express (a, b) in terms of the input (v1, v2).
  std::array<std::array<std::int64_t, 2>, 2> m{{{1, 0}, {0, 1}}};
  for (int guard = 0; guard < 10000; ++guard) {
    if (dot(a, a) > dot(b, b)) {
      std::swap(a, b);
      std::swap(m[0], m[1]);
    }
    const double mu = std::round(dot(a, b) / dot(a, a));
    if (mu == 0.0) break;
    const auto k = static_cast<std::int64_t>(mu);
    b -= mu * a;
    m[1][0] -= k * m[0][0];
    m[1][1] -= k * m[0][1];
    if (dot(b, b) >= dot(a, a)) break;
  }
  if (cross(a, b) < 0.0) {
    b = -b;
    m[1][0] = -m[1][0];
    m[1][1] = -m[1][1];
  }
  const double aa = dot(a, a);
  double x = dot(a, b) / aa;
  const double y = cross(a, b) / aa;

  StandardForm out;
  out.transform.scale = 1.0 / std::sqrt(aa);
  out.transform.rotation = -std::atan2(a.y, a.x);
  out.transform.matrix = m;
  if (x < 0.0) {
    x = -x;
    out.transform.reflected = true;
  }
  out.point = {x, y};
  return out;
}

// Calls fn(a, b, vector) for every lattice translate delta + a*v1 + b*v2 of
// length at most `radius`. The index ranges are computed exactly from the
// geometry so no fixed search window is needed.
template <typename Fn>
void for_each_translate_within(const Vec2& delta, const ModuliPoint& m,
                               double radius, Fn&& fn) {
  const double b_lo = std::ceil((-radius - delta.y) / m.y);
  const double b_hi = std::floor((radius - delta.y) / m.y);
  for (double bf = b_lo; bf <= b_hi; bf += 1.0) {
    const double yy = delta.y + bf * m.y;
    const double span2 = radius * radius - yy * yy;
    if (span2 < 0.0) continue;
    const double span = std::sqrt(span2);
    const double base = delta.x + bf * m.x;
    const double a_lo = std::ceil(-span - base);
    const double a_hi = std::floor(span - base);
    for (double af = a_lo; af <= a_hi; af += 1.0) {
      fn(static_cast<std::int64_t>(af), static_cast<std::int64_t>(bf),
         Vec2{base + af, yy});
    }
  }
}

// Shortest lattice translate of q - p.
inline Displacement nearest_translate(const TorusPoint& p, const TorusPoint& q,
                                      const ModuliPoint& m) {
  const Vec2 raw = q.vec() - p.vec();
  auto [t1, t2] = lattice_coordinates(raw, m);
  const auto a0 = static_cast<std::int64_t>(-std::round(t1));
  const auto b0 = static_cast<std::int64_t>(-std::round(t2));
  const Vec2 centred = raw + m.lattice(a0, b0);
  // The centred vector is within half a cell diagonal; anything shorter lies
  // in that disk.
  Displacement best{a0, b0, centred};
  double best_len = norm(centred);
  for_each_translate_within(centred, m, best_len + 1e-12,
                            [&](std::int64_t a, std::int64_t b, Vec2 v) {
                              const double len = norm(v);
                              if (len < best_len) {
                                best_len = len;
                                best = {a0 + a, b0 + b, v};
                              }
                            });
  return best;
}

inline double torus_distance(const TorusPoint& p, const TorusPoint& q,
                             const ModuliPoint& m) {
  return norm(nearest_translate(p, q, m).vec);
}

inline double fundamental_domain_area(const ModuliPoint& m) { return m.y; }

namespace detail {

// Keeps one of each +/- pair of self translates.
inline bool positive_half(std::int64_t a, std::int64_t b) {
  return b > 0 || (b == 0 && a > 0);
}

inline std::vector<Displacement> tangencies(const TorusPoint& p,
                                            const TorusPoint& q,
                                            const ModuliPoint& m, double r,
                                            double tol, bool self) {
  const Vec2 raw = q.vec() - p.vec();
  auto [t1, t2] = lattice_coordinates(raw, m);
  const auto a0 = static_cast<std::int64_t>(-std::round(t1));
  const auto b0 = static_cast<std::int64_t>(-std::round(t2));
  const Vec2 centred = raw + m.lattice(a0, b0);
  std::vector<Displacement> out;
  bool overlap = false;
  double overlap_len = 0.0;
  for_each_translate_within(
      centred, m, 2.0 * r + tol, [&](std::int64_t a, std::int64_t b, Vec2 v) {
        const std::int64_t ta = a0 + a, tb = b0 + b;
        if (self && ta == 0 && tb == 0) return;
        const double len = norm(v);
        if (len < 2.0 * r - tol) {
          overlap = true;
          overlap_len = len;
          return;
        }
        if (self && !positive_half(ta, tb)) return;
        out.push_back({ta, tb, v});
      });
  if (overlap) {
    std::ostringstream os;
    os << "circles overlap: centre distance " << overlap_len
       << " is below 2r = " << 2.0 * r;
    throw OverlapDetected(os.str());
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
    return std::pair(l.a, l.b) < std::pair(r.a, r.b);
  });
  return out;
}

}  // namespace detail

// Tangency witnesses between the circles of radius r at p and q: every
// lattice translate t with | |q + t - p| - 2r | <= tol. When p and q are the
// same circle (identical representatives) t = 0 is excluded and t, -t are
// reported once.
inline std::vector<Displacement> tangency_displacements(
    const TorusPoint& p, const TorusPoint& q, const ModuliPoint& m, double r,
    double tol = kTangencyTol) {
  return detail::tangencies(p, q, m, r, tol, p == q);
}

// Same as tangency_displacements but with the self/other decision explicit.
inline std::vector<Displacement> tangency_displacements(
    const TorusPoint& p, const TorusPoint& q, const ModuliPoint& m, double r,
    double tol, bool same_circle) {
  return detail::tangencies(p, q, m, r, tol, same_circle);
}

}  // namespace toruspack
