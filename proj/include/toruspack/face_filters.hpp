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

// Combinatorial filters on toroidal embeddings.
//
// forbidden_face_filter: local face patterns that no vertex of a locally
// maximally dense equal circle packing can be surrounded by. In an
// equal-edge realization every triangle is equilateral (corner angle pi/3)
// and every quadrilateral a rhombus, so these corner combinations either fail
// to close up to 2*pi or leave an angle of at least pi.
//
// parallel_chain_filter: edge vectors forced equal by rhombi. If BA and CD
// are the same vector and BC is an edge, then ABCD is a parallelogram with
// side BC, so AD must be an edge with the homology class of BC.

#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "toruspack/embedding.hpp"

namespace toruspack {

struct FacePattern {
  int id;               // 1..9
  const char* name;
};

inline constexpr FacePattern kFacePatterns[] = {
    {1, "two triangles and a polygon"},
    {2, "three triangles and a polygon"},
    {3, "five triangles"},
    {4, "four triangles and a quadrilateral"},
    {5, "six polygons with at least one non-triangle"},
    {6, "a triangle, a quadrilateral and a polygon"},
    {7, "two triangles and two quadrilaterals"},
    {8, "three quadrilaterals"},
    {9, "seven or more polygons"},
};

// Pattern id matched by a vertex whose corners lie in faces of the given
// sizes (one entry per corner, any order), or 0. "Polygon" matches any size.
inline int match_face_pattern(std::vector<int> corners) {
  std::sort(corners.begin(), corners.end());
  const auto deg = corners.size();
  const auto count = [&](int size) {
    return static_cast<std::size_t>(std::count(corners.begin(), corners.end(), size));
  };
  const std::size_t tri = count(3), quad = count(4);
  if (deg >= 7) return 9;
  if (deg == 3) {
    if (tri >= 2) return 1;
    if (tri >= 1 && quad >= 1) return 6;
    if (quad == 3) return 8;
  }
  if (deg == 4) {
    if (tri >= 3) return 2;
    if (tri == 2 && quad == 2) return 7;
  }
  if (deg == 5) {
    if (tri == 5) return 3;
    if (tri == 4 && quad == 1) return 4;
  }
  if (deg == 6 && tri < 6) return 5;
  return 0;
}

struct FaceFilterVerdict {
  bool keep = true;
  int vertex = -1;   // first offending vertex
  int pattern = 0;   // 1..9 when eliminated
  std::vector<int> corners;
};

// Corner face sizes around v: one per dart leaving v, the size of the face
// that leaves v along that dart.
inline std::vector<int> corner_sizes(const EmbeddedGraph& e, int v) {
  const auto sizes = e.face_size_of_dart();
  std::vector<int> out;
  for (int d : e.rotation.cyclic[static_cast<std::size_t>(v)])
    out.push_back(sizes[static_cast<std::size_t>(d)]);
  return out;
}

inline FaceFilterVerdict forbidden_face_filter(const EmbeddedGraph& e) {
  FaceFilterVerdict out;
  for (int v = 0; v < e.darts.vertex_count; ++v) {
    auto corners = corner_sizes(e, v);
    if (int p = match_face_pattern(corners); p != 0) {
      out.keep = false;
      out.vertex = v;
      out.pattern = p;
      out.corners = std::move(corners);
      return out;
    }
  }
  return out;
}

enum class ChainFailure {
  none,
  missing_edge,      // the parallelogram's fourth side is absent
  coincident_edges,  // two edges leave one vertex along the same vector
  zero_vector,       // an edge forced equal to its own reverse
};

struct ChainWitness {
  ChainFailure failure = ChainFailure::none;
  // For missing_edge: darts x = B->A and y = C->D carry the same vector and
  // z = B->C; no edge A->D has class v(z) + v(y) - v(x).
  int A = -1, B = -1, C = -1, D = -1;
  int x = -1, y = -1, z = -1;
  Voltage required{0, 0};
};

// Darts grouped into classes of equal plane vectors. Holds the invariant
// that d ~ e iff reverse(d) ~ reverse(e).
class DartClasses {
 public:
  explicit DartClasses(int dart_count) : parent_(static_cast<std::size_t>(dart_count)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int d) {
    while (parent_[static_cast<std::size_t>(d)] != d) {
      auto& p = parent_[static_cast<std::size_t>(d)];
      p = parent_[static_cast<std::size_t>(p)];
      d = p;
    }
    return d;
  }
  bool same(int a, int b) { return find(a) == find(b); }
  // Returns true if the classes were distinct.
  bool join(int a, int b) {
    const bool changed = unite(a, b);
    unite(reverse_dart(a), reverse_dart(b));
    return changed;
  }
  int class_count() {
    int c = 0;
    for (int d = 0; d < static_cast<int>(parent_.size()); ++d) c += find(d) == d;
    return c;
  }

 private:
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(a)] = b;
    return true;
  }
  std::vector<int> parent_;
};

namespace detail {

inline Voltage add(const Voltage& a, const Voltage& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Voltage sub(const Voltage& a, const Voltage& b) { return {a[0] - b[0], a[1] - b[1]}; }

// Rhombus classes: every closed walk of four distinct consecutive edges with
// zero homology bounds a rhombus in an equal-length realization, so its
// opposite sides are equal and opposite. Quadrilateral faces are such walks.
inline DartClasses rhombus_classes(const EmbeddedGraph& e,
                                   const std::vector<Voltage>& volt) {
  const auto& g = e.darts;
  DartClasses cls(g.dart_count());
  const auto at = g.darts_at();
  for (int a = 0; a < g.dart_count(); ++a)
    for (int b : at[static_cast<std::size_t>(g.head(a))]) {
      if (dart_edge(b) == dart_edge(a)) continue;
      for (int c : at[static_cast<std::size_t>(g.head(b))]) {
        if (dart_edge(c) == dart_edge(b)) continue;
        for (int d : at[static_cast<std::size_t>(g.head(c))]) {
          if (dart_edge(d) == dart_edge(c) || dart_edge(d) == dart_edge(a)) continue;
          if (g.head(d) != g.tail(a)) continue;
          const Voltage sum = add(add(dart_voltage(volt, a), dart_voltage(volt, b)),
                                  add(dart_voltage(volt, c), dart_voltage(volt, d)));
          if (sum != Voltage{0, 0}) continue;
          cls.join(a, reverse_dart(c));
          cls.join(b, reverse_dart(d));
        }
      }
    }
  return cls;
}

// Applies the parallelogram rule to a fixed point. Each forced fourth side
// joins the class of BC, which can enable further chains.
inline ChainWitness close_chains(const EmbeddedGraph& e,
                                 const std::vector<Voltage>& volt,
                                 DartClasses& cls) {
  const auto& g = e.darts;
  const int D = g.dart_count();
  ChainWitness w;
  for (bool changed = true; changed;) {
    changed = false;
    for (int x = 0; x < D; ++x) {
      if (cls.same(x, reverse_dart(x))) {
        w.failure = ChainFailure::zero_vector;
        w.x = x;
        return w;
      }
      for (int y = 0; y < D; ++y) {
        if (x == y || !cls.same(x, y)) continue;
        if (g.tail(x) == g.tail(y)) {
          w.failure = ChainFailure::coincident_edges;
          w.x = x;
          w.y = y;
          w.B = g.tail(x);
          return w;
        }
        const int B = g.tail(x), A = g.head(x), C = g.tail(y), Dv = g.head(y);
        for (int z = 0; z < D; ++z) {
          if (g.tail(z) != B || g.head(z) != C || z == x || reverse_dart(z) == y)
            continue;
          const Voltage need =
              sub(add(dart_voltage(volt, z), dart_voltage(volt, y)), dart_voltage(volt, x));
          int found = -1;
          for (int f = 0; f < D && found < 0; ++f)
            if (g.tail(f) == A && g.head(f) == Dv && dart_voltage(volt, f) == need)
              found = f;
          if (found < 0) {
            w = {ChainFailure::missing_edge, A, B, C, Dv, x, y, z, need};
            return w;
          }
          if (cls.join(found, z)) changed = true;
        }
      }
    }
  }
  return w;
}

}  // namespace detail

struct CongruenceWitness {
  // Two pairs of parallel edges whose lifts differ by the same lattice
  // vector: darts p1, p2 share tail and head, as do q1, q2.
  int p1 = -1, p2 = -1, q1 = -1, q2 = -1;
  ChainWitness direct;   // contradiction when p1 ~ q1, p2 ~ q2
  ChainWitness mirror;   // contradiction when p1 ~ -q2, p2 ~ -q1
};

struct ParallelChainVerdict {
  bool keep = true;
  ChainWitness witness;
  int vector_classes = 0;  // dart classes after closure (when kept)
  // Filled only when the congruence analysis was requested and the
  // embedding survived the chain rule.
  bool congruence_checked = false;
  bool congruence_keep = true;
  std::optional<CongruenceWitness> congruence;
};

// Two edges between the same circles whose lifts differ by the lattice
// vector t form an isosceles triangle with base t. Any other such pair with
// the same t is congruent to it, either directly or mirrored across t; the
// embedding is ruled out when both cases lead to a chain contradiction.
inline std::optional<CongruenceWitness> congruence_contradiction(
    const EmbeddedGraph& e, const std::vector<Voltage>& volt,
    const DartClasses& base) {
  const auto& g = e.darts;
  const int D = g.dart_count();
  auto parallel = [&](int a, int b) {
    return a != b && g.tail(a) == g.tail(b) && g.head(a) == g.head(b);
  };
  for (int p1 = 0; p1 < D; ++p1)
    for (int p2 = 0; p2 < D; ++p2) {
      if (!parallel(p1, p2)) continue;
      const Voltage t = detail::sub(dart_voltage(volt, p2), dart_voltage(volt, p1));
      for (int q1 = 0; q1 < D; ++q1)
        for (int q2 = 0; q2 < D; ++q2) {
          if (!parallel(q1, q2)) continue;
          const int ep1 = dart_edge(p1), ep2 = dart_edge(p2);
          const int eq1 = dart_edge(q1), eq2 = dart_edge(q2);
          if ((ep1 == eq1 && ep2 == eq2) || (ep1 == eq2 && ep2 == eq1)) continue;
          if (detail::sub(dart_voltage(volt, q2), dart_voltage(volt, q1)) != t) continue;
          DartClasses direct = base;
          direct.join(p1, q1);
          direct.join(p2, q2);
          const auto wd = detail::close_chains(e, volt, direct);
          if (wd.failure == ChainFailure::none) continue;
          DartClasses mirror = base;
          mirror.join(p1, reverse_dart(q2));
          mirror.join(p2, reverse_dart(q1));
          const auto wm = detail::close_chains(e, volt, mirror);
          if (wm.failure == ChainFailure::none) continue;
          return CongruenceWitness{p1, p2, q1, q2, wd, wm};
        }
    }
  return std::nullopt;
}

inline ParallelChainVerdict parallel_chain_filter(const EmbeddedGraph& e,
                                                  bool with_congruence = false) {
  ParallelChainVerdict out;
  const auto volt = assign_voltages(e);
  auto cls = detail::rhombus_classes(e, volt);
  out.witness = detail::close_chains(e, volt, cls);
  out.keep = out.witness.failure == ChainFailure::none;
  if (!out.keep) return out;
  out.vector_classes = cls.class_count();
  if (with_congruence) {
    out.congruence_checked = true;
    out.congruence = congruence_contradiction(e, volt, cls);
    out.congruence_keep = !out.congruence.has_value();
  }
  return out;
}

}  // namespace toruspack
