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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "toruspack/pipeline.hpp"

namespace {

namespace tp = toruspack;

std::map<std::string, tp::EcgVerdict> by_name(const tp::PipelineReport& r) {
  std::map<std::string, tp::EcgVerdict> out;
  for (const auto& v : r.ecgs) out[v.name] = v;
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(ExpectedCounts, OnlyThreeAndFour) {
  EXPECT_EQ(tp::expected_counts(3).size(), 6u);
  EXPECT_EQ(tp::expected_counts(4).size(), 6u);
  EXPECT_THROW(tp::expected_counts(2), tp::UnsupportedN);
  EXPECT_THROW(tp::run_pipeline(tp::PipelineOptions{5}), tp::UnsupportedN);
}

TEST(RegionProbes, LabelsAndPlacement) {
  for (const auto& p : tp::region_probes(4)) {
    EXPECT_TRUE(tp::in_moduli_strip(p.m)) << p.label;
    if (p.label == "R2_4") {
      EXPECT_EQ(tp::classify(4, p.m).name(), "R2_4");
    }
    // An upper edge lies on the curve and so classifies one region up.
    if (p.label == "R2_4 upper edge") {
      EXPECT_EQ(tp::classify(4, p.m).name(), "R3_4");
    }
  }
}

TEST(Pipeline, ThreeCirclesWithoutRealization) {
  tp::PipelineOptions opt;
  opt.n = 3;
  opt.skip_oracle = true;
  const auto r = tp::run_pipeline(opt);
  EXPECT_TRUE(r.counts_ok());
  EXPECT_EQ(r.summary(), "37/10/3; embeddings 6; filters 6/6");
  EXPECT_TRUE(r.comparisons.empty());
  const auto v = by_name(r);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_TRUE(has(v.at("ECG1-1").gmd_regions, "R1_3"));
  EXPECT_TRUE(has(v.at("ECG1-2").gmd_regions, "R2_3"));
  EXPECT_TRUE(has(v.at("ECG2-1").gmd_regions, "R1_3 upper edge"));
  EXPECT_TRUE(has(v.at("ECG2-3").gmd_regions, "R2_3 right edge"));
  EXPECT_TRUE(has(v.at("ECG3-1").gmd_regions, "close packing at (0.5000, 0.8660)"));
  EXPECT_TRUE(v.at("ECG2-2").gmd_regions.empty());
  for (const auto& [name, e] : v) {
    EXPECT_FALSE(e.realization_run);
    EXPECT_FALSE(e.realizable.has_value());
  }
}

TEST(Pipeline, ThreeCirclesWithRealizationIsDeterministic) {
  tp::PipelineOptions opt;
  opt.n = 3;
  opt.realization_attempts = 40;
  opt.classified_samples = 6;
  opt.comparison_points_per_region = 1;
  opt.restarts = 30;
  const auto a = tp::run_pipeline(opt);
  const auto v = by_name(a);
  for (const auto& [name, e] : v) EXPECT_EQ(e.realizable, std::optional<bool>(true)) << name;
  EXPECT_EQ(v.at("ECG1-1").lmd, std::optional<bool>(true));
  EXPECT_EQ(v.at("ECG2-2").lmd, std::optional<bool>(false));
  EXPECT_EQ(a.comparisons.size(), 3u);
  for (const auto& c : a.comparisons) EXPECT_LT(c.gap, 1e-4);
  EXPECT_EQ(tp::run_pipeline(opt), a);
}

}  // namespace
