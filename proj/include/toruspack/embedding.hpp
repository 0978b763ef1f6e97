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

// 2-cell embeddings of multigraphs given by rotation systems.
//
// Edge k of a graph joins edges[k].first < edges[k].second. It has two darts
// (edge ends): dart 2k leaves the first endpoint, dart 2k+1 leaves the
// second. A rotation system lists, for every vertex, the darts leaving it in
// counter-clockwise order. Faces are the orbits of
//
//     phi(d) = next(reverse(d)),
//
// i.e. arrive at a vertex along d and leave along the dart that follows the
// reversed dart in that vertex's rotation.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "toruspack/census.hpp"

namespace toruspack {

inline constexpr int reverse_dart(int d) { return d ^ 1; }
inline constexpr int dart_edge(int d) { return d >> 1; }

struct GraphDarts {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int dart_count() const { return 2 * edge_count(); }
  int tail(int d) const {
    const auto& e = edges[static_cast<std::size_t>(dart_edge(d))];
    return (d & 1) ? e.second : e.first;
  }
  int head(int d) const { return tail(reverse_dart(d)); }
  std::vector<std::vector<int>> darts_at() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(vertex_count));
    for (int d = 0; d < dart_count(); ++d)
      out[static_cast<std::size_t>(tail(d))].push_back(d);
    return out;
  }
};

inline GraphDarts darts_of(const Multigraph& g) {
  return {g.vertex_count(), g.edge_list()};
}

struct RotationSystem {
  // cyclic[v] holds the darts leaving v in cyclic order.
  std::vector<std::vector<int>> cyclic;

  // next[d] = dart after d around its tail vertex.
  std::vector<int> successor_table(int dart_count) const {
    std::vector<int> next(static_cast<std::size_t>(dart_count), -1);
    for (const auto& cyc : cyclic) {
      for (std::size_t i = 0; i < cyc.size(); ++i)
        next[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
    }
    return next;
  }

  RotationSystem reversed() const {
    RotationSystem r = *this;
    for (auto& cyc : r.cyclic)
      if (cyc.size() > 1) std::reverse(cyc.begin() + 1, cyc.end());
    return r;
  }

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

inline bool valid_rotation(const GraphDarts& g, const RotationSystem& rot) {
  if (rot.cyclic.size() != static_cast<std::size_t>(g.vertex_count)) return false;
  std::vector<int> seen(static_cast<std::size_t>(g.dart_count()), 0);
  for (std::size_t v = 0; v < rot.cyclic.size(); ++v) {
    for (int d : rot.cyclic[v]) {
      if (d < 0 || d >= g.dart_count()) return false;
      if (g.tail(d) != static_cast<int>(v)) return false;
      if (seen[static_cast<std::size_t>(d)]++) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

using Face = std::vector<int>;  // closed walk of darts

// Faces in order of their smallest dart; each walk starts at that dart.
inline std::vector<Face> trace_faces(const GraphDarts& g,
                                     const RotationSystem& rot) {
  const int D = g.dart_count();
  const auto next = rot.successor_table(D);
  std::vector<char> used(static_cast<std::size_t>(D), 0);
  std::vector<Face> faces;
  for (int start = 0; start < D; ++start) {
    if (used[static_cast<std::size_t>(start)]) continue;
    Face f;
    int d = start;
    do {
      used[static_cast<std::size_t>(d)] = 1;
      f.push_back(d);
      d = next[static_cast<std::size_t>(reverse_dart(d))];
    } while (d != start);
    faces.push_back(std::move(f));
  }
  return faces;
}

inline int euler_characteristic(const GraphDarts& g,
                                 const std::vector<Face>& faces) {
  return g.vertex_count - g.edge_count() + static_cast<int>(faces.size());
}

// Canonical code of a connected map, invariant under relabeling vertices and
// edges and, when `unoriented`, under reversing every rotation. For each root
// dart and orientation the darts are numbered in breadth-first order along
// (next, reverse); the code lists (number(next d), number(reverse d)) in that
// order. The minimum over all roots is returned.
inline std::vector<std::uint8_t> map_code(const std::vector<int>& next,
                                          bool unoriented) {
  const int D = static_cast<int>(next.size());
  std::vector<int> prev(static_cast<std::size_t>(D));
  for (int d = 0; d < D; ++d) prev[static_cast<std::size_t>(next[static_cast<std::size_t>(d)])] = d;

  std::vector<std::uint8_t> best, code;
  std::vector<int> number(static_cast<std::size_t>(D)), order(static_cast<std::size_t>(D));
  code.reserve(static_cast<std::size_t>(2 * D));
  for (int orient = 0; orient < (unoriented ? 2 : 1); ++orient) {
    const auto& step = orient == 0 ? next : prev;
    for (int root = 0; root < D; ++root) {
      std::fill(number.begin(), number.end(), -1);
      int assigned = 0, head = 0;
      number[static_cast<std::size_t>(root)] = assigned;
      order[static_cast<std::size_t>(assigned++)] = root;
      code.clear();
      bool worse = false, better = best.empty();
      while (head < assigned) {
        const int d = order[static_cast<std::size_t>(head++)];
        for (int nb : {step[static_cast<std::size_t>(d)], reverse_dart(d)}) {
          if (number[static_cast<std::size_t>(nb)] < 0) {
            number[static_cast<std::size_t>(nb)] = assigned;
            order[static_cast<std::size_t>(assigned++)] = nb;
          }
          const auto c = static_cast<std::uint8_t>(number[static_cast<std::size_t>(nb)]);
          if (!better) {
            const std::uint8_t b = best[code.size()];
            if (c > b) {
              worse = true;
              break;
            }
            if (c < b) better = true;
          }
          code.push_back(c);
        }
        if (worse) break;
      }
      if (!worse && better) best = code;
    }
  }
  return best;
}

// Orbit-counting helpers for the brute-force enumeration.
namespace detail {

// All cyclic orders of `darts` with the first element fixed.
inline std::vector<std::vector<int>> cyclic_orders(std::vector<int> darts) {
  std::vector<std::vector<int>> out;
  if (darts.size() <= 1) {
    out.push_back(darts);
    return out;
  }
  std::sort(darts.begin() + 1, darts.end());
  do {
    out.push_back(darts);
  } while (std::next_permutation(darts.begin() + 1, darts.end()));
  return out;
}

}  // namespace detail

struct EmbeddedGraph {
  Multigraph graph;
  GraphDarts darts;
  RotationSystem rotation;
  std::vector<Face> faces;
  std::vector<std::uint8_t> canonical_form;

  int euler() const { return euler_characteristic(darts, faces); }

  // Size of the face containing each dart.
  std::vector<int> face_size_of_dart() const {
    std::vector<int> out(static_cast<std::size_t>(darts.dart_count()), 0);
    for (const auto& f : faces)
      for (int d : f) out[static_cast<std::size_t>(d)] = static_cast<int>(f.size());
    return out;
  }
  std::vector<int> face_of_dart() const {
    std::vector<int> out(static_cast<std::size_t>(darts.dart_count()), -1);
    for (std::size_t i = 0; i < faces.size(); ++i)
      for (int d : faces[i]) out[static_cast<std::size_t>(d)] = static_cast<int>(i);
    return out;
  }
  // Sorted face lengths.
  std::vector<int> face_vector() const {
    std::vector<int> out;
    for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
    std::sort(out.begin(), out.end());
    return out;
  }
};

inline EmbeddedGraph make_embedding(const Multigraph& g, RotationSystem rot) {
  EmbeddedGraph e;
  e.graph = g;
  e.darts = darts_of(g);
  e.rotation = std::move(rot);
  if (!valid_rotation(e.darts, e.rotation)) {
    throw Error("rotation system does not match the graph");
  }
  e.faces = trace_faces(e.darts, e.rotation);
  e.canonical_form =
      map_code(e.rotation.successor_table(e.darts.dart_count()), true);
  return e;
}

struct EmbeddingEnumeration {
  std::vector<EmbeddedGraph> embeddings;  // distinct unlabeled, unoriented
  std::uint64_t rotation_systems = 0;     // product of (deg-1)! over vertices
  std::uint64_t toroidal_labeled = 0;     // labeled digon-free systems, chi = 0
  std::size_t oriented_distinct = 0;      // distinct up to relabeling only
  std::vector<std::uint64_t> orbit_sizes; // labeled systems per embedding
};

// True if some face of the rotation is a digon: parallel darts d (u->v) and
// f (v->u) with next(reverse d) = f and next(reverse f) = d. Such a face
// would force two parallel edges onto the same segment.
inline bool has_digon(const std::vector<int>& next, int dart_count) {
  for (int d = 0; d < dart_count; ++d) {
    const int f = next[static_cast<std::size_t>(reverse_dart(d))];
    if (f >= 0 && f != reverse_dart(d) &&
        next[static_cast<std::size_t>(reverse_dart(f))] == d)
      return true;
  }
  return false;
}

// Edmonds' permutation technique: every rotation system of `g` is formed,
// its faces traced, and those with Euler characteristic 0 (torus) kept up to
// map isomorphism and reflection. Embeddings with a digon face are skipped;
// parallel edges bounding a disk cannot both be straight segments of equal
// length. Parallel edges are distinct objects during enumeration and only
// identified through map isomorphism.
inline EmbeddingEnumeration enumerate_toroidal(const Multigraph& g) {
  const GraphDarts gd = darts_of(g);
  const int V = gd.vertex_count, D = gd.dart_count();
  const int target_faces = gd.edge_count() - V;  // chi = 0

  const auto darts_at = gd.darts_at();
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& at : darts_at) choices.push_back(detail::cyclic_orders(at));

  EmbeddingEnumeration out;
  out.rotation_systems = 1;
  for (const auto& c : choices) out.rotation_systems *= c.size();

  std::map<std::vector<std::uint8_t>, std::size_t> seen;
  std::set<std::vector<std::uint8_t>> oriented;
  std::vector<std::size_t> idx(static_cast<std::size_t>(V), 0);
  std::vector<int> next(static_cast<std::size_t>(D), -1);

  // Darts whose digon test becomes decidable once vertex v is placed.
  std::vector<std::vector<int>> check_at(static_cast<std::size_t>(V));
  for (int d = 0; d < D; ++d)
    check_at[static_cast<std::size_t>(std::max(gd.tail(d), gd.head(d)))].push_back(d);

  auto leaf = [&] {
    std::uint64_t mask = 0;
    int faces = 0;
    for (int s = 0; s < D && faces <= target_faces; ++s) {
      if (mask >> s & 1u) continue;
      ++faces;
      int d = s;
      do {
        mask |= std::uint64_t{1} << d;
        d = next[static_cast<std::size_t>(reverse_dart(d))];
      } while (d != s);
    }
    if (faces != target_faces) return;
    ++out.toroidal_labeled;
    auto code = map_code(next, true);
    auto it = seen.find(code);
    if (it == seen.end()) {
      RotationSystem rot;
      for (int v = 0; v < V; ++v)
        rot.cyclic.push_back(choices[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]]);
      seen.emplace(std::move(code), out.embeddings.size());
      out.embeddings.push_back(make_embedding(g, std::move(rot)));
      out.orbit_sizes.push_back(1);
    } else {
      ++out.orbit_sizes[it->second];
    }
    oriented.insert(map_code(next, false));
  };

  // With vertices 0..v placed, face walks through placed vertices are known.
  // Closed walks are final faces; the other darts form open chains, one per
  // dart leaving an unplaced vertex. A torus needs exactly E - V faces, each
  // of length >= 3, so the branch is dead unless
  //   closed <= target <= closed + min(chains, open_darts / 3).
  std::vector<int> mark(static_cast<std::size_t>(D));
  auto can_reach_torus = [&](int v) {
    std::fill(mark.begin(), mark.end(), 0);
    int chains = 0, open_darts = 0, closed = 0;
    for (int d = 0; d < D; ++d) {
      if (gd.tail(d) <= v) continue;
      ++chains;
      int c = d;
      while (true) {
        mark[static_cast<std::size_t>(c)] = 1;
        ++open_darts;
        if (gd.head(c) > v) break;
        c = next[static_cast<std::size_t>(reverse_dart(c))];
      }
    }
    for (int d = 0; d < D; ++d) {
      if (mark[static_cast<std::size_t>(d)]) continue;
      ++closed;
      int c = d;
      do {
        mark[static_cast<std::size_t>(c)] = 1;
        c = next[static_cast<std::size_t>(reverse_dart(c))];
      } while (c != d);
    }
    return closed <= target_faces &&
           closed + std::min(chains, open_darts / 3) >= target_faces;
  };

  auto place = [&](auto&& self, int v) -> void {
    if (v == V) {
      leaf();
      return;
    }
    const auto& opts = choices[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < opts.size(); ++i) {
      idx[static_cast<std::size_t>(v)] = i;
      const auto& cyc = opts[i];
      for (std::size_t j = 0; j < cyc.size(); ++j)
        next[static_cast<std::size_t>(cyc[j])] = cyc[(j + 1) % cyc.size()];
      bool digon = false;
      for (int d : check_at[static_cast<std::size_t>(v)]) {
        const int f = next[static_cast<std::size_t>(reverse_dart(d))];
        if (f != reverse_dart(d) && next[static_cast<std::size_t>(reverse_dart(f))] == d) {
          digon = true;
          break;
        }
      }
      if (!digon && (v + 1 == V || can_reach_torus(v))) self(self, v + 1);
    }
    for (int d : darts_at[static_cast<std::size_t>(v)]) next[static_cast<std::size_t>(d)] = -1;
  };
  place(place, 0);
  out.oriented_distinct = oriented.size();
  return out;
}

using Voltage = std::array<std::int64_t, 2>;

// Homology classes of the edges of a toroidal embedding, as integer
// coordinates in a basis of H1(torus). The returned value for edge k is the
// class of dart 2k; dart 2k+1 carries the negation. Every face walk sums to
// zero and the values generate Z^2.
//
// Tree-cotree construction: edges of a BFS spanning tree get 0, a spanning
// tree of the dual on the remaining edges is solved leaf-first from the face
// equations, and the two leftover edges get the unit vectors.
inline std::vector<Voltage> assign_voltages(const EmbeddedGraph& e) {
  const auto& g = e.darts;
  const int E = g.edge_count(), V = g.vertex_count;
  const int F = static_cast<int>(e.faces.size());
  if (V - E + F != 0) throw Error("voltages need a toroidal embedding");
  std::vector<int> kind(static_cast<std::size_t>(E), 0);  // 1 tree, 2 dual tree, 3 generator
  {
    std::vector<char> seen(static_cast<std::size_t>(V), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    const auto at = g.darts_at();
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int d : at[static_cast<std::size_t>(queue[h])]) {
        const int w = g.head(d);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          kind[static_cast<std::size_t>(dart_edge(d))] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  const auto face_of = e.face_of_dart();
  // Dual spanning tree over non-tree edges; parent_edge[f] links f upward.
  std::vector<int> parent_edge(static_cast<std::size_t>(F), -1), order;
  {
    std::vector<char> seen(static_cast<std::size_t>(F), 0);
    seen[0] = 1;
    order.push_back(0);
    for (std::size_t h = 0; h < order.size(); ++h) {
      const int f = order[h];
      for (int d : e.faces[static_cast<std::size_t>(f)]) {
        const int k = dart_edge(d);
        if (kind[static_cast<std::size_t>(k)] != 0) continue;
        const int other = face_of[static_cast<std::size_t>(reverse_dart(d))];
        if (seen[static_cast<std::size_t>(other)]) continue;
        seen[static_cast<std::size_t>(other)] = 1;
        kind[static_cast<std::size_t>(k)] = 2;
        parent_edge[static_cast<std::size_t>(other)] = k;
        order.push_back(other);
      }
    }
  }
  std::vector<Voltage> volt(static_cast<std::size_t>(E), Voltage{0, 0});
  int generators = 0;
  for (int k = 0; k < E; ++k) {
    if (kind[static_cast<std::size_t>(k)] == 0) {
      kind[static_cast<std::size_t>(k)] = 3;
      volt[static_cast<std::size_t>(k)][static_cast<std::size_t>(generators < 2 ? generators : 1)] = 1;
      ++generators;
    }
  }
  if (generators != 2) throw Error("tree-cotree decomposition did not leave two generators");
  auto dart_volt = [&](int d) {
    const auto& v = volt[static_cast<std::size_t>(dart_edge(d))];
    return (d & 1) ? Voltage{-v[0], -v[1]} : v;
  };
  // Leaves first: every face except the root fixes its parent edge.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int f = *it;
    const int k = parent_edge[static_cast<std::size_t>(f)];
    if (k < 0) continue;
    Voltage sum{0, 0};
    int sign = 0;
    for (int d : e.faces[static_cast<std::size_t>(f)]) {
      if (dart_edge(d) == k) {
        sign += (d & 1) ? -1 : 1;
        continue;
      }
      const auto dv = dart_volt(d);
      sum[0] += dv[0];
      sum[1] += dv[1];
    }
    if (sign != 1 && sign != -1) throw Error("dual tree edge appears twice in a face");
    volt[static_cast<std::size_t>(k)] = {-sign * sum[0], -sign * sum[1]};
  }
  return volt;
}

inline Voltage dart_voltage(const std::vector<Voltage>& volt, int d) {
  const auto& v = volt[static_cast<std::size_t>(dart_edge(d))];
  return (d & 1) ? Voltage{-v[0], -v[1]} : v;
}

}  // namespace toruspack
