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

// Static SVG 1.1 figures. Output depends only on the inputs: numbers are
// printed with a fixed precision and nothing is timestamped.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "toruspack/errors.hpp"
#include "toruspack/lattice.hpp"
#include "toruspack/moduli_regions.hpp"
#include "toruspack/packing.hpp"

namespace toruspack {

struct FigureSpec {
  enum class Kind { packing, moduli };
  Kind kind = Kind::packing;
  int width = 640;
  int height = 640;
  double stroke_width = 1.5;
  bool labels = true;
};

inline constexpr int kCurveSamples = 512;

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  return s == "-0.0000" ? "0.0000" : s;
}

// Affine map from model coordinates (y up) to pixels (y down).
struct Viewport {
  double x0, y0, scale, height;
  double px(double x) const { return (x - x0) * scale; }
  double py(double y) const { return height - (y - y0) * scale; }
};

inline Viewport fit(const FigureSpec& spec, double xmin, double xmax, double ymin,
                    double ymax) {
  if (spec.width <= 0 || spec.height <= 0)
    throw Error("figure dimensions must be positive");
  const double s = std::min(spec.width / (xmax - xmin), spec.height / (ymax - ymin));
  // Center the drawing in the unused direction.
  const double cx = (xmin + xmax) / 2.0, cy = (ymin + ymax) / 2.0;
  return {cx - spec.width / (2.0 * s), cy - spec.height / (2.0 * s), s,
          static_cast<double>(spec.height)};
}

inline std::string header(const FigureSpec& spec) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
         "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
         std::to_string(spec.height) + "\">\n";
}

inline double dist_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
  return norm(p - (a + t * ab));
}

// Distance from p to the closed parallelogram spanned by v1 and v2.
inline double dist_to_domain(const Vec2& p, const ModuliPoint& m) {
  const auto c = lattice_coordinates(p, m);
  if (c[0] >= 0.0 && c[0] <= 1.0 && c[1] >= 0.0 && c[1] <= 1.0) return 0.0;
  const Vec2 o{}, a = m.v1(), b = m.v2(), ab = a + b;
  return std::min({dist_to_segment(p, o, a), dist_to_segment(p, a, ab),
                   dist_to_segment(p, ab, b), dist_to_segment(p, b, o)});
}

}  // namespace detail

// The fundamental domain, every circle lift whose disk meets it, the
// tangency edges from each center to the touching lift, and center labels.
inline std::string render_packing(const Packing& p, const PackingGraph& g,
                                  const FigureSpec& spec = {}) {
  const ModuliPoint& m = p.m;
  const double r = p.radius;
  const double xmin = std::min(0.0, m.x) - r - 0.1, xmax = std::max(1.0, 1.0 + m.x) + r + 0.1;
  const double ymin = -r - 0.1, ymax = m.y + r + 0.1;
  const auto vp = detail::fit(spec, xmin, xmax, ymin, ymax);
  using detail::num;
  const std::string sw = num(spec.stroke_width);

  std::string out = detail::header(spec);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const Vec2 corners[4] = {{0, 0}, m.v1(), m.v1() + m.v2(), m.v2()};
  out += "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"" + sw + "\" points=\"";
  for (int k = 0; k < 4; ++k) {
    if (k) out += ' ';
    out += num(vp.px(corners[k].x)) + "," + num(vp.py(corners[k].y));
  }
  out += "\"/>\n";

  out += "<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"" + sw + "\">\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2 c = p.centers[i].vec();
    // Lifts within r of the domain; the window covers every candidate.
    const Vec2 mid = 0.5 * (m.v1() + m.v2());
    for_each_translate_within(c - mid, m, 1.0 + m.x + m.y + r, [&](std::int64_t a, std::int64_t b, const Vec2&) {
      const Vec2 q = c + m.lattice(a, b);
      if (detail::dist_to_domain(q, m) > r) return;
      out += "<circle cx=\"" + num(vp.px(q.x)) + "\" cy=\"" + num(vp.py(q.y)) +
             "\" r=\"" + num(r * vp.scale) + "\"/>\n";
    });
  }
  out += "</g>\n";

  out += "<g stroke=\"#c0392b\" stroke-width=\"" + sw + "\">\n";
  for (const auto& e : g.edges) {
    const Vec2 a = p.centers[static_cast<std::size_t>(e.i)].vec();
    const Vec2 b = a + e.d.vec;
    out += "<line x1=\"" + num(vp.px(a.x)) + "\" y1=\"" + num(vp.py(a.y)) + "\" x2=\"" +
           num(vp.px(b.x)) + "\" y2=\"" + num(vp.py(b.y)) + "\"/>\n";
  }
  out += "</g>\n";

  if (spec.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vec2 c = p.centers[i].vec();
      out += "<text x=\"" + num(vp.px(c.x) + 4.0) + "\" y=\"" + num(vp.py(c.y) - 4.0) +
             "\">" + std::to_string(i) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

// The moduli strip for n circles: the floor arc, the region boundary curves
// as 512-point polylines, region labels, and open markers at the
// triangular-close-packing tori.
inline std::string render_moduli(int n, const FigureSpec& spec = {}) {
  require_supported_n(n);
  const int regions = region_count(n);
  const double top = region_curve(n, regions - 1, 0.0) + 0.6;
  const double ymin = 0.75;
  const auto vp = detail::fit(spec, -0.15, 0.65, ymin, top);
  using detail::num;
  const std::string sw = num(spec.stroke_width);

  std::string out = detail::header(spec);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto vline = [&](double x) {
    out += "<line stroke=\"black\" stroke-width=\"" + sw + "\" x1=\"" + num(vp.px(x)) +
           "\" y1=\"" + num(vp.py(std::sqrt(1.0 - x * x))) + "\" x2=\"" + num(vp.px(x)) +
           "\" y2=\"" + num(vp.py(top)) + "\"/>\n";
  };
  vline(0.0);
  vline(0.5);
  for (int k = 0; k < regions; ++k) {
    out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" + sw +
           "\" data-curve=\"" + std::to_string(k) + "\" points=\"";
    for (int s = 0; s < kCurveSamples; ++s) {
      const double x = 0.5 * s / (kCurveSamples - 1);
      if (s) out += ' ';
      out += num(vp.px(x)) + "," + num(vp.py(region_curve(n, k, x)));
    }
    out += "\"/>\n";
  }
  if (spec.labels) {
    out += "<g font-family=\"sans-serif\" font-size=\"14\" fill=\"black\" text-anchor=\"middle\">\n";
    for (int k = 1; k <= regions; ++k) {
      const double x = 0.25;
      const double lo = region_curve(n, k - 1, x);
      const double hi = k < regions ? region_curve(n, k, x) : top;
      const RegionId id{n, k, {}};
      out += "<text x=\"" + num(vp.px(x)) + "\" y=\"" + num(vp.py((lo + hi) / 2.0) + 5.0) +
             "\">" + id.name() + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "<g fill=\"white\" stroke=\"black\" stroke-width=\"" + sw + "\">\n";
  for (const auto& q : triangular_close_packing_points(n)) {
    out += "<circle cx=\"" + num(vp.px(q.x)) + "\" cy=\"" + num(vp.py(q.y)) + "\" r=\"5\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace toruspack
