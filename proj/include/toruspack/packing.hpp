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

// Equal circle packings on a standard torus and their contact graphs.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "toruspack/census.hpp"
#include "toruspack/embedding.hpp"
#include "toruspack/lattice.hpp"

namespace toruspack {

struct Packing {
  ModuliPoint m;
  std::vector<TorusPoint> centers;
  double radius = 0.0;

  std::size_t size() const { return centers.size(); }
  friend bool operator==(const Packing&, const Packing&) = default;
};

// Tangency between circles i <= j realized by the lattice translate d of
// circle j. Loops (i == j) are stored once with d in the positive half.
struct PackingEdge {
  int i = 0;
  int j = 0;
  Displacement d;

  bool is_loop() const { return i == j; }
  friend bool operator==(const PackingEdge& l, const PackingEdge& r) {
    return l.i == r.i && l.j == r.j && l.d == r.d;
  }
};

struct PackingGraph {
  int vertex_count = 0;
  std::vector<PackingEdge> edges;  // sorted by (i, j, a, b)

  std::size_t edge_count() const { return edges.size(); }
  std::size_t loop_count() const {
    return static_cast<std::size_t>(std::count_if(
        edges.begin(), edges.end(), [](const auto& e) { return e.is_loop(); }));
  }
  friend bool operator==(const PackingGraph&, const PackingGraph&) = default;
};

inline PackingGraph extract_graph(const Packing& p, double tol = kTangencyTol) {
  PackingGraph g;
  g.vertex_count = static_cast<int>(p.size());
  for (int i = 0; i < g.vertex_count; ++i) {
    for (int j = i; j < g.vertex_count; ++j) {
      const auto ds = tangency_displacements(
          p.centers[static_cast<std::size_t>(i)],
          p.centers[static_cast<std::size_t>(j)], p.m, p.radius, tol, i == j);
      for (const auto& d : ds) g.edges.push_back({i, j, d});
    }
  }
  return g;
}

inline double density(const Packing& p) {
  return static_cast<double>(p.size()) * kPi * p.radius * p.radius /
         fundamental_domain_area(p.m);
}

// Half the smallest distance between distinct circles or between a circle
// and its own translates.
inline double max_radius_for_centers(const ModuliPoint& m,
                                     const std::vector<TorusPoint>& centers) {
  // The shortest nonzero lattice vector of a standard basis is v1.
  double best = 1.0;
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      best = std::min(best, torus_distance(centers[i], centers[j], m));
  return best / 2.0;
}

// Directions (unit vectors) of the tangencies around each circle; loops
// contribute both +d and -d.
inline std::vector<std::vector<Vec2>> tangency_directions(const PackingGraph& g) {
  std::vector<std::vector<Vec2>> out(static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    const Vec2 u = e.d.vec / norm(e.d.vec);
    out[static_cast<std::size_t>(e.i)].push_back(u);
    out[static_cast<std::size_t>(e.j)].push_back(-u);
  }
  return out;
}

// Cyclic gaps between consecutive tangency directions at each vertex, sorted
// ascending. A vertex with a single direction reports one gap of 2*pi.
inline std::vector<std::vector<double>> angle_spectrum(const PackingGraph& g,
                                                       const Packing& p) {
  (void)p;
  std::vector<std::vector<double>> out;
  for (const auto& dirs : tangency_directions(g)) {
    std::vector<double> ang;
    for (const auto& u : dirs) ang.push_back(std::atan2(u.y, u.x));
    std::sort(ang.begin(), ang.end());
    std::vector<double> gaps;
    for (std::size_t k = 0; k < ang.size(); ++k) {
      const double next = k + 1 < ang.size() ? ang[k + 1] : ang[0] + 2.0 * kPi;
      gaps.push_back(next - ang[k]);
    }
    std::sort(gaps.begin(), gaps.end());
    out.push_back(std::move(gaps));
  }
  return out;
}

struct TangencyReport {
  std::vector<int> degree;         // edge ends per vertex, loops count twice
  std::map<std::pair<int, int>, int> multiplicity;  // i < j
  std::size_t loops = 0;
  std::size_t total = 0;
  // Smallest gap between a reported tangency distance and the nearest
  // non-tangent distance, relative to 2r. Small values mean the extraction
  // tolerance decided the count.
  double separation = std::numeric_limits<double>::infinity();
};

inline TangencyReport tangency_report(const PackingGraph& g, const Packing& p,
                                      double tol = kTangencyTol) {
  TangencyReport r;
  r.degree.assign(static_cast<std::size_t>(g.vertex_count), 0);
  for (const auto& e : g.edges) {
    ++r.degree[static_cast<std::size_t>(e.i)];
    ++r.degree[static_cast<std::size_t>(e.j)];
    if (e.is_loop()) {
      ++r.loops;
    } else {
      ++r.multiplicity[{e.i, e.j}];
    }
  }
  r.total = g.edges.size();
  const double two_r = 2.0 * p.radius;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i; j < p.size(); ++j) {
      const Vec2 raw = p.centers[j].vec() - p.centers[i].vec();
      for_each_translate_within(
          raw, p.m, 2.0 * two_r, [&](std::int64_t a, std::int64_t b, Vec2 v) {
            (void)a;
            (void)b;
            const double len = norm(v);
            if (len < 1e-15) return;
            const double gap = std::abs(len - two_r);
            if (gap > tol) r.separation = std::min(r.separation, gap / two_r);
          });
    }
  }
  return r;
}

// The simple loopless multigraph underlying g (loops dropped).
inline Multigraph underlying_multigraph(const PackingGraph& g) {
  Multigraph out(g.vertex_count);
  for (const auto& e : g.edges)
    if (!e.is_loop()) out.add_edge(e.i, e.j);
  return out;
}

// Embedding read off the geometry: darts leave each circle in the
// counterclockwise order of their tangency directions. Requires a loopless
// graph; edge k of the multigraph is the k-th non-loop tangency.
inline EmbeddedGraph embedding_from_packing(const PackingGraph& g) {
  const Multigraph mg = underlying_multigraph(g);
  std::vector<Vec2> dart_vec;
  for (const auto& e : g.edges) {
    if (e.is_loop()) throw Error("embedding_from_packing needs a loopless graph");
    dart_vec.push_back(e.d.vec);
    dart_vec.push_back(-e.d.vec);
  }
  const auto darts = darts_of(mg);
  RotationSystem rot;
  rot.cyclic = darts.darts_at();
  for (auto& cyc : rot.cyclic) {
    std::sort(cyc.begin(), cyc.end(), [&](int a, int b) {
      const Vec2 u = dart_vec[static_cast<std::size_t>(a)];
      const Vec2 w = dart_vec[static_cast<std::size_t>(b)];
      return std::atan2(u.y, u.x) < std::atan2(w.y, w.x);
    });
  }
  return make_embedding(mg, std::move(rot));
}

}  // namespace toruspack
