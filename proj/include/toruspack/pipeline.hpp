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

// Pipeline orchestration: census, embeddings, filters, realization,
// rigidity, and the closed-form cross-check, in that order.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toruspack/catalog.hpp"
#include "toruspack/closed_form.hpp"
#include "toruspack/oracle.hpp"
#include "toruspack/rigidity.hpp"

namespace toruspack {

struct CountCheck {
  std::string name;
  long long expected = 0;
  long long actual = 0;

  bool ok() const { return expected == actual; }
  friend bool operator==(const CountCheck&, const CountCheck&) = default;
};

struct EcgVerdict {
  int graph_index = 0;
  std::string graph;
  int embedding_index = 0;
  std::string name;
  std::vector<int> faces;  // face sizes, ascending
  bool congruence_keep = true;
  bool realization_run = false;
  int attempts = 0;
  int samples = 0;
  int rigid = 0;
  int flexible = 0;
  int free_circle = 0;
  std::optional<bool> realizable;  // unset when realization was skipped
  std::optional<bool> lmd;         // some classified sample is rigid
  std::vector<std::string> sample_regions;
  std::vector<std::string> gmd_regions;  // where the closed-form optimum has this map

  friend bool operator==(const EcgVerdict&, const EcgVerdict&) = default;
};

struct PipelineReport {
  int schema = 1;
  int n = 0;
  std::uint64_t seed = 1;
  bool oracle_skipped = false;
  std::size_t stage1 = 0, stage2 = 0, stage3 = 0;
  std::size_t embeddings = 0, after_face = 0, after_both = 0, after_congruence = 0;
  std::vector<EcgVerdict> ecgs;
  std::vector<ComparisonReport> comparisons;
  std::vector<CountCheck> checks;

  bool counts_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok(); });
  }
  std::string summary() const {
    return std::to_string(stage1) + "/" + std::to_string(stage2) + "/" +
           std::to_string(stage3) + "; embeddings " + std::to_string(embeddings) +
           "; filters " + std::to_string(after_face) + "/" + std::to_string(after_both);
  }
  friend bool operator==(const PipelineReport&, const PipelineReport&) = default;
};

struct PipelineOptions {
  int n = 4;
  std::uint64_t seed = 1;
  bool skip_oracle = false;         // also skips realization
  int realization_attempts = 200;
  std::size_t classified_samples = 16;
  int comparison_points_per_region = 2;
  int restarts = 200;
};

// Reference counts the pipeline must reproduce exactly.
inline std::vector<CountCheck> expected_counts(int n) {
  if (n == 3)
    return {{"stage1", 37, 0}, {"stage2", 10, 0}, {"stage3", 3, 0},
            {"embeddings", 6, 0}, {"after_face_filter", 6, 0}, {"after_both_filters", 6, 0}};
  if (n == 4)
    return {{"stage1", 825, 0}, {"stage2", 102, 0}, {"stage3", 20, 0},
            {"embeddings", 97, 0}, {"after_face_filter", 31, 0}, {"after_both_filters", 21, 0}};
  throw UnsupportedN("pipeline supports n = 3 or 4, got " + std::to_string(n));
}

struct Probe {
  std::string label;
  ModuliPoint m;
};

// Interior, side-edge and upper-edge probe points of each region with
// radius < 1/2, plus the triangular-close-packing tori. A region's upper curve belongs to the next region, so it is
// labeled after the region below it.
inline std::vector<Probe> region_probes(int n) {
  std::vector<Probe> out;
  const int R = region_count(n);
  for (int k = 1; k < R; ++k) {
    const std::string name = RegionId{n, k, {}}.name();
    auto between = [&](double x) {
      return std::make_pair(region_curve(n, k - 1, x), region_curve(n, k, x));
    };
    if (auto [lo, hi] = between(0.25); hi - lo > 1e-6) {
      out.push_back({name, {0.25, (lo + hi) / 2.0}});
      out.push_back({name + " upper edge", {0.25, hi}});
    }
    if (auto [lo, hi] = between(0.0); hi - lo > 1e-6)
      out.push_back({name + " left edge", {0.0, (lo + hi) / 2.0}});
    if (auto [lo, hi] = between(0.5); hi - lo > 1e-6)
      out.push_back({name + " right edge", {0.5, (lo + hi) / 2.0}});
  }
  for (const auto& m : triangular_close_packing_points(n)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "close packing at (%.4f, %.4f)", m.x, m.y);
    out.push_back({buf, m});
  }
  return out;
}

// Contact-graph embedding of the closed-form optimum at m; empty when the
// graph has loops.
inline std::optional<EmbeddedGraph> optimum_embedding(int n, const ModuliPoint& m) {
  const auto g = extract_graph(optimal_centers(n, m).packing(), 1e-9);
  if (g.loop_count() != 0) return std::nullopt;
  return embedding_from_packing(g);
}

inline EcgVerdict realization_verdict(const EmbeddingRecord& rec, int n,
                                      const PipelineOptions& opt) {
  EcgVerdict v;
  v.graph_index = rec.graph_index;
  v.graph = rec.graph;
  v.embedding_index = rec.embedding_index;
  v.name = rec.name;
  for (const auto& f : rec.embedding.faces) v.faces.push_back(static_cast<int>(f.size()));
  std::sort(v.faces.begin(), v.faces.end());
  v.congruence_keep = rec.chain.congruence_keep;
  if (opt.skip_oracle) return v;
  v.realization_run = true;
  v.attempts = opt.realization_attempts;
  const auto samples = realize_embedding(
      rec.embedding, {opt.realization_attempts, opt.seed, true}, rec.name);
  v.samples = static_cast<int>(samples.size());
  v.realizable = !samples.empty();
  std::set<std::string> regions;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    regions.insert(classify(n, samples[k].m).name());
    if (k >= opt.classified_samples) continue;
    switch (classify_packing(samples[k].packing(), 1e-7).verdict) {
      case PackingClass::rigid_lmd: ++v.rigid; break;
      case PackingClass::flexible: ++v.flexible; break;
      case PackingClass::free_circle: ++v.free_circle; break;
    }
  }
  v.sample_regions.assign(regions.begin(), regions.end());
  if (!samples.empty()) v.lmd = v.rigid > 0;
  return v;
}

// `stage` must come from run_embedding_stage(opt.n, true).
inline PipelineReport run_pipeline(const PipelineOptions& opt, const EmbeddingStage& stage) {
  PipelineReport rep;
  rep.n = opt.n;
  rep.seed = opt.seed;
  rep.oracle_skipped = opt.skip_oracle;
  rep.checks = expected_counts(opt.n);
  rep.stage1 = stage.census.stage1.size();
  rep.stage2 = stage.census.stage2.size();
  rep.stage3 = stage.census.stage3.size();
  rep.embeddings = stage.embeddings();
  rep.after_face = stage.after_face();
  rep.after_both = stage.after_both();
  rep.after_congruence = stage.after_congruence();
  const std::size_t actual[] = {rep.stage1, rep.stage2, rep.stage3,
                                rep.embeddings, rep.after_face, rep.after_both};
  for (std::size_t k = 0; k < rep.checks.size(); ++k)
    rep.checks[k].actual = static_cast<long long>(actual[k]);

  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> optima;
  for (const auto& p : region_probes(opt.n))
    if (auto e = optimum_embedding(opt.n, p.m)) optima.emplace_back(p.label, e->canonical_form);

  for (const auto& rec : stage.records) {
    if (!rec.survivor_ordinal) continue;
    auto v = realization_verdict(rec, opt.n, opt);
    for (const auto& [label, code] : optima)
      if (code == rec.embedding.canonical_form) v.gmd_regions.push_back(label);
    rep.ecgs.push_back(std::move(v));
  }

  if (!opt.skip_oracle) {
    for (int k = 1; k <= region_count(opt.n); ++k)
      for (const auto& m : sample_region(opt.n, k, opt.comparison_points_per_region, opt.seed))
        rep.comparisons.push_back(compare_with_closed_form(
            opt.n, m, {opt.restarts, opt.seed, 4}));
  }
  return rep;
}

inline PipelineReport run_pipeline(const PipelineOptions& opt) {
  expected_counts(opt.n);  // rejects unsupported n before the census runs
  return run_pipeline(opt, run_embedding_stage(opt.n, true));
}

}  // namespace toruspack
