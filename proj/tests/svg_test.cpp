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

#include <cmath>
#include <regex>
#include <sstream>

#include "toruspack/closed_form.hpp"
#include "toruspack/svg.hpp"

namespace {

namespace tp = toruspack;

std::size_t count(const std::string& doc, const std::string& needle) {
  std::size_t c = 0;
  for (auto pos = doc.find(needle); pos != std::string::npos; pos = doc.find(needle, pos + 1)) ++c;
  return c;
}

std::vector<std::smatch> matches(const std::string& doc, const std::regex& re) {
  return {std::sregex_iterator(doc.begin(), doc.end(), re), std::sregex_iterator()};
}

TEST(RenderPacking, SquareTorusPair) {
  const auto p = tp::optimal_centers(2, {0.0, 1.0}).packing();
  const auto g = tp::extract_graph(p);
  const auto doc = tp::render_packing(p, g);
  EXPECT_EQ(doc.rfind("<?xml", 0), 0u);
  EXPECT_NE(doc.find("<svg xmlns="), std::string::npos);
  EXPECT_EQ(doc.substr(doc.size() - 7), "</svg>\n");
  EXPECT_EQ(count(doc, "<text"), 2u);
  EXPECT_EQ(count(doc, "<line"), 4u);
  EXPECT_GE(count(doc, "<circle"), 2u);
  EXPECT_EQ(doc, tp::render_packing(p, g));
}

// Each tangency edge drawn from a center to the touching lift is exactly
// two radii long in picture units.
TEST(RenderPacking, EdgesSpanTwoRadii) {
  const auto p = tp::optimal_centers(4, {0.1, 1.0}).packing();
  const auto doc = tp::render_packing(p, tp::extract_graph(p));
  const std::regex circle_re("<circle cx=\"[-0-9.]+\" cy=\"[-0-9.]+\" r=\"([-0-9.]+)\"");
  const auto circles = matches(doc, circle_re);
  ASSERT_FALSE(circles.empty());
  const double r_px = std::stod(circles[0][1]);
  const std::regex line_re(
      "<line x1=\"([-0-9.]+)\" y1=\"([-0-9.]+)\" x2=\"([-0-9.]+)\" y2=\"([-0-9.]+)\"");
  const auto lines = matches(doc, line_re);
  ASSERT_EQ(lines.size(), 9u);
  for (const auto& l : lines) {
    const double len = std::hypot(std::stod(l[3]) - std::stod(l[1]), std::stod(l[4]) - std::stod(l[2]));
    EXPECT_NEAR(len, 2 * r_px, 2e-3);
  }
}

TEST(RenderPacking, EmptyPacking) {
  const tp::Packing p{{0.0, 1.0}, {}, 0.0};
  const auto doc = tp::render_packing(p, tp::extract_graph(p));
  EXPECT_EQ(count(doc, "<circle"), 0u);
  EXPECT_EQ(count(doc, "<line"), 0u);
  EXPECT_EQ(count(doc, "<polygon"), 1u);
}

TEST(RenderPacking, LabelsCanBeTurnedOff) {
  const auto p = tp::optimal_centers(3, {0.0, 2.0}).packing();
  tp::FigureSpec spec;
  spec.labels = false;
  EXPECT_EQ(count(tp::render_packing(p, tp::extract_graph(p), spec), "<text"), 0u);
}

TEST(RenderPacking, RejectsEmptyCanvas) {
  const auto p = tp::optimal_centers(2, {0.0, 1.0}).packing();
  tp::FigureSpec spec;
  spec.width = 0;
  EXPECT_THROW(tp::render_packing(p, tp::extract_graph(p), spec), tp::Error);
}

TEST(RenderModuli, OnePolylinePerCurve) {
  const std::regex poly_re("<polyline[^>]*points=\"([^\"]*)\"");
  for (int n = 2; n <= 4; ++n) {
    const auto doc = tp::render_moduli(n);
    const auto polys = matches(doc, poly_re);
    ASSERT_EQ(polys.size(), static_cast<std::size_t>(n)) << n;
    for (const auto& p : polys) {
      std::istringstream is(p[1].str());
      std::string pt;
      std::size_t pts = 0;
      while (is >> pt) ++pts;
      EXPECT_EQ(pts, static_cast<std::size_t>(tp::kCurveSamples));
    }
    EXPECT_EQ(count(doc, "<text"), static_cast<std::size_t>(n));
    EXPECT_EQ(count(doc, "<circle"), tp::triangular_close_packing_points(n).size());
    EXPECT_EQ(doc.find("-0.0000"), std::string::npos);
    EXPECT_EQ(doc, tp::render_moduli(n));
  }
  EXPECT_THROW(tp::render_moduli(5), tp::UnsupportedN);
}

}  // namespace
