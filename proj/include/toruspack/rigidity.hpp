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

// Strut frameworks of packings on a fixed torus.
//
// Sign conventions: a strut (i, j, e) joins circle i to the lift of circle j
// at i + e. A velocity field v is a flex when (v_j - v_i) . e >= 0 for every
// strut, and nontrivial when it is not a common translation (vertex 0 is
// pinned, so nontrivial means nonzero). A stress w is in equilibrium when at
// every vertex the sum of w_s times the outgoing strut vectors vanishes, and
// proper when every w_s < 0 (normalized here to w_s <= -1).
//
// Both questions are decided by exact rational linear programs over the edge
// vectors rounded to denominator 10^12.

#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toruspack/packing.hpp"
#include "toruspack/rational_lp.hpp"

namespace toruspack {

struct Strut {
  int i = 0;
  int j = 0;
  Vec2 e;
};

struct StrutFramework {
  std::vector<Vec2> vertices;
  std::vector<Strut> struts;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
};

struct FlexVector {
  std::vector<Vec2> velocity;  // velocity[0] is zero
};

struct Stress {
  std::vector<double> weights;  // one per strut, all <= -1
};

// Loops are dropped: a circle moving with its own translate never changes
// that distance.
inline StrutFramework build_framework(const Packing& p, const PackingGraph& g,
                                      double tol = 1e-6) {
  StrutFramework f;
  for (const auto& c : p.centers) f.vertices.push_back(c.vec());
  for (const auto& e : g.edges) {
    if (e.is_loop()) continue;
    const double len = norm(e.d.vec);
    if (std::abs(len - 2.0 * p.radius) > tol) {
      std::ostringstream os;
      os << "strut " << e.i << "-" << e.j << " has length " << len
         << ", expected " << 2.0 * p.radius;
      throw InconsistentLengths(os.str());
    }
    f.struts.push_back({e.i, e.j, e.d.vec});
  }
  return f;
}

namespace detail {

// Variables w_k = v_k + 1 in [0, 2] for the coordinates of vertices 1..n-1.
inline LinearProgram<Rational> flex_cone(const StrutFramework& f) {
  const int n = f.vertex_count();
  LinearProgram<Rational> lp;
  lp.variables = static_cast<std::size_t>(2 * (n - 1));
  auto col = [](int v, int c) { return static_cast<std::size_t>(2 * (v - 1) + c); };
  for (const auto& s : f.struts) {
    if (s.i == s.j) continue;
    const Rational ex = rationalize(s.e.x), ey = rationalize(s.e.y);
    // (v_j - v_i) . e >= 0 with v = w - 1 off the pinned vertex.
    std::vector<Rational> row(lp.variables, Rational(0));
    Rational b(0);
    auto put = [&](int v, const Rational& sx, const Rational& sy) {
      if (v == 0) return;
      row[col(v, 0)] += sx;
      row[col(v, 1)] += sy;
      b += sx + sy;
    };
    put(s.j, ex, ey);
    put(s.i, -ex, -ey);
    lp.add_row(std::move(row), Sense::ge, b);
  }
  for (std::size_t k = 0; k < lp.variables; ++k) {
    std::vector<Rational> row(lp.variables, Rational(0));
    row[k] = 1;
    lp.add_row(std::move(row), Sense::le, Rational(2));
  }
  return lp;
}

}  // namespace detail

inline std::optional<FlexVector> find_nontrivial_flex(const StrutFramework& f) {
  const int n = f.vertex_count();
  if (n <= 1) return std::nullopt;
  auto lp = detail::flex_cone(f);
  for (std::size_t k = 0; k < lp.variables; ++k) {
    for (int sign : {1, -1}) {
      lp.objective.assign(lp.variables, Rational(0));
      lp.objective[k] = sign;
      const auto res = solve_lp(lp);
      if (res.status != LpStatus::optimal) continue;
      // Objective +-w_k; the zero field sits at +-1.
      if (res.value - Rational(sign) <= 0) continue;
      FlexVector flex;
      flex.velocity.assign(static_cast<std::size_t>(n), Vec2{});
      for (int v = 1; v < n; ++v) {
        flex.velocity[static_cast<std::size_t>(v)] = {
            to_double(res.x[static_cast<std::size_t>(2 * (v - 1))] - 1),
            to_double(res.x[static_cast<std::size_t>(2 * (v - 1) + 1)] - 1)};
      }
      return flex;
    }
  }
  return std::nullopt;
}

inline bool is_flex(const StrutFramework& f, const FlexVector& v,
                    double tol = 1e-6) {
  for (const auto& s : f.struts) {
    const Vec2 dv = v.velocity[static_cast<std::size_t>(s.j)] -
                    v.velocity[static_cast<std::size_t>(s.i)];
    if (dot(dv, s.e) < -tol) return false;
  }
  return true;
}

inline std::optional<Stress> find_proper_stress(const StrutFramework& f) {
  const int n = f.vertex_count();
  const std::size_t S = f.struts.size();
  // w_s = -(1 + u_s) with u_s >= 0.
  LinearProgram<Rational> lp;
  lp.variables = S;
  std::vector<std::vector<Rational>> coeff(
      static_cast<std::size_t>(2 * n), std::vector<Rational>(S, Rational(0)));
  for (std::size_t s = 0; s < S; ++s) {
    const auto& st = f.struts[s];
    const Rational ex = rationalize(st.e.x), ey = rationalize(st.e.y);
    coeff[static_cast<std::size_t>(2 * st.i)][s] += ex;
    coeff[static_cast<std::size_t>(2 * st.i + 1)][s] += ey;
    coeff[static_cast<std::size_t>(2 * st.j)][s] -= ex;
    coeff[static_cast<std::size_t>(2 * st.j + 1)][s] -= ey;
  }
  for (auto& row : coeff) {
    Rational b(0);
    for (const auto& c : row) b -= c;
    // sum c_s w_s = 0  <=>  sum c_s u_s = -sum c_s
    lp.add_row(row, Sense::eq, b);
  }
  const auto res = solve_lp(lp);
  if (res.status != LpStatus::optimal) return std::nullopt;
  Stress out;
  for (std::size_t s = 0; s < S; ++s) out.weights.push_back(-1.0 - to_double(res.x[s]));
  return out;
}

inline double equilibrium_residual(const StrutFramework& f, const Stress& w) {
  std::vector<Vec2> force(f.vertices.size());
  for (std::size_t s = 0; s < f.struts.size(); ++s) {
    const auto& st = f.struts[s];
    force[static_cast<std::size_t>(st.i)] += w.weights[s] * st.e;
    force[static_cast<std::size_t>(st.j)] -= w.weights[s] * st.e;
  }
  double worst = 0.0;
  for (const auto& v : force) worst = std::max(worst, norm(v));
  return worst;
}

enum class PackingClass { rigid_lmd, flexible, free_circle };

inline std::string to_string(PackingClass c) {
  switch (c) {
    case PackingClass::rigid_lmd: return "rigid-LMD";
    case PackingClass::flexible: return "flexible";
    case PackingClass::free_circle: return "free-circle";
  }
  return "unknown";
}

struct RigidityVerdict {
  PackingClass verdict = PackingClass::free_circle;
  int free_vertex = -1;
  std::optional<FlexVector> flex;
  std::optional<Stress> stress;
};

// A circle is free when it has fewer than three struts or all of its strut
// directions lie in a closed half-plane.
inline int find_free_vertex(const StrutFramework& f) {
  std::vector<std::vector<double>> angles(f.vertices.size());
  for (const auto& s : f.struts) {
    angles[static_cast<std::size_t>(s.i)].push_back(std::atan2(s.e.y, s.e.x));
    angles[static_cast<std::size_t>(s.j)].push_back(std::atan2(-s.e.y, -s.e.x));
  }
  for (std::size_t v = 0; v < angles.size(); ++v) {
    auto& a = angles[v];
    if (a.size() < 3) return static_cast<int>(v);
    std::sort(a.begin(), a.end());
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double next = k + 1 < a.size() ? a[k + 1] : a[0] + 2.0 * kPi;
      if (next - a[k] >= kPi - 1e-12) return static_cast<int>(v);
    }
  }
  return -1;
}

inline RigidityVerdict classify_framework(const StrutFramework& f) {
  RigidityVerdict out;
  out.free_vertex = find_free_vertex(f);
  if (out.free_vertex >= 0) {
    out.verdict = PackingClass::free_circle;
    return out;
  }
  out.flex = find_nontrivial_flex(f);
  out.stress = find_proper_stress(f);
  out.verdict = out.flex ? PackingClass::flexible : PackingClass::rigid_lmd;
  return out;
}

inline RigidityVerdict classify_packing(const Packing& p,
                                        double tol = kTangencyTol) {
  const auto g = extract_graph(p, tol);
  return classify_framework(build_framework(p, g, std::max(tol, 1e-9)));
}

}  // namespace toruspack
