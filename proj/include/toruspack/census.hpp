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

// Census of loopless multigraphs that can be contact graphs of locally
// maximally dense packings of 3 or 4 equal circles.
//
// Stage 1: connected, no loops, between 2n-1 and 3n edges.
// Stage 2: additionally every vertex has between 3 and 6 incident edge ends.
// Stage 3: additionally no pair joined by 3 or more edges, except the n = 3
//          triangle with every pair tripled (triangular close packing).

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toruspack/errors.hpp"

namespace toruspack {

// Loopless multigraph on a handful of vertices, stored as pair
// multiplicities in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count)
      : n_(vertex_count),
        mult_(static_cast<std::size_t>(vertex_count * (vertex_count - 1) / 2),
              0) {}
  Multigraph(int vertex_count, std::vector<int> multiplicities)
      : n_(vertex_count), mult_(std::move(multiplicities)) {
    if (mult_.size() != static_cast<std::size_t>(n_ * (n_ - 1) / 2)) {
      throw Error("multiplicity vector has the wrong length");
    }
  }

  static Multigraph from_edges(int vertex_count,
                               const std::vector<std::pair<int, int>>& edges) {
    Multigraph g(vertex_count);
    for (auto [u, v] : edges) {
      if (u == v) throw Error("loops are not allowed in a Multigraph");
      g.add_edge(u, v);
    }
    return g;
  }

  int vertex_count() const { return n_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  std::size_t pair_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    // Row-major upper triangle.
    return static_cast<std::size_t>(u * n_ - u * (u + 1) / 2 + (v - u - 1));
  }
  int multiplicity(int u, int v) const {
    return u == v ? 0 : mult_[pair_index(u, v)];
  }
  void add_edge(int u, int v) { ++mult_[pair_index(u, v)]; }

  int edge_count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

  // Incident edge ends; a double edge contributes 2.
  int degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += multiplicity(u, v);
    return d;
  }
  int max_multiplicity() const {
    return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v) {
        if (!seen[static_cast<std::size_t>(v)] && multiplicity(u, v) > 0) {
          seen[static_cast<std::size_t>(v)] = 1;
          stack.push_back(v);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }

  // Edges expanded one entry per parallel copy, sorted by (u, v).
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        for (int k = 0; k < multiplicity(u, v); ++k) out.emplace_back(u, v);
    return out;
  }

  Multigraph relabeled(const std::vector<int>& perm) const {
    Multigraph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        g.mult_[g.pair_index(perm[static_cast<std::size_t>(u)],
                             perm[static_cast<std::size_t>(v)])] =
            multiplicity(u, v);
    return g;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int n_ = 0;
  std::vector<int> mult_;
};

using CanonicalForm = std::vector<std::uint8_t>;

// Relabeling-invariant byte string: the vertex count followed by the
// lexicographically largest multiplicity vector over all vertex
// permutations. Exhaustive, which is fine for the tiny graphs here.
inline CanonicalForm canonicalize(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    auto m = g.relabeled(perm).multiplicities();
    if (best.empty() || m > best) best = std::move(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CanonicalForm out;
  out.push_back(static_cast<std::uint8_t>(n));
  for (int k : best) out.push_back(static_cast<std::uint8_t>(k));
  return out;
}

inline Multigraph from_canonical(const CanonicalForm& form) {
  const int n = form.at(0);
  std::vector<int> mult(form.begin() + 1, form.end());
  return Multigraph(n, std::move(mult));
}

inline std::string canonical_string(const CanonicalForm& form) {
  std::string s = std::to_string(form.empty() ? 0 : form[0]) + ":";
  for (std::size_t i = 1; i < form.size(); ++i) {
    if (i > 1) s += ',';
    s += std::to_string(form[i]);
  }
  return s;
}

inline bool degree_condition(const Multigraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d < 3 || d > 6) return false;
  }
  return true;
}

// The single exception to the multiplicity bound: three vertices, every
// pair joined three times.
inline bool is_triple_triangle(const Multigraph& g) {
  if (g.vertex_count() != 3) return false;
  const auto& m = g.multiplicities();
  return std::all_of(m.begin(), m.end(), [](int k) { return k == 3; });
}

inline bool multiplicity_condition(const Multigraph& g) {
  return g.max_multiplicity() <= 2 || is_triple_triangle(g);
}

struct CensusResult {
  int n = 0;
  std::vector<Multigraph> stage1;
  std::vector<Multigraph> stage2;
  std::vector<Multigraph> stage3;

  std::array<std::size_t, 3> counts() const {
    return {stage1.size(), stage2.size(), stage3.size()};
  }
};

// Enumerates stage 1-3 graphs, deduplicated by canonical form and ordered by
// edge count, then canonical form (descending, so denser pair patterns come
// first within an edge count).
inline CensusResult enumerate_census(int n) {
  if (n != 3 && n != 4) {
    throw UnsupportedN("graph census is defined for n = 3 and n = 4 only");
  }
  const int pairs = n * (n - 1) / 2;
  const int lo = 2 * n - 1, hi = 3 * n;
  std::set<CanonicalForm> forms;
  std::vector<int> mult(static_cast<std::size_t>(pairs), 0);
  // Odometer over multiplicity vectors with entries in [0, hi].
  auto recurse = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == pairs) {
      if (hi - remaining < lo) return;
      Multigraph g(n, mult);
      if (g.connected()) forms.insert(canonicalize(g));
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      mult[static_cast<std::size_t>(idx)] = k;
      self(self, idx + 1, remaining - k);
    }
    mult[static_cast<std::size_t>(idx)] = 0;
  };
  recurse(recurse, 0, hi);

  std::vector<Multigraph> graphs;
  graphs.reserve(forms.size());
  for (const auto& f : forms) graphs.push_back(from_canonical(f));
  std::stable_sort(graphs.begin(), graphs.end(),
                   [](const Multigraph& a, const Multigraph& b) {
                     if (a.edge_count() != b.edge_count())
                       return a.edge_count() < b.edge_count();
                     return a.multiplicities() > b.multiplicities();
                   });

  CensusResult out;
  out.n = n;
  out.stage1 = graphs;
  for (const auto& g : out.stage1)
    if (degree_condition(g)) out.stage2.push_back(g);
  for (const auto& g : out.stage2)
    if (multiplicity_condition(g)) out.stage3.push_back(g);
  return out;
}

}  // namespace toruspack
