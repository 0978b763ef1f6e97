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

// toruspack: solve | pipeline | verify. Exit codes: 0 success, 1 a check
// failed, 2 degenerate lattice, 3 other input errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toruspack/catalog.hpp"
#include "toruspack/closed_form.hpp"
#include "toruspack/json_io.hpp"
#include "toruspack/oracle.hpp"
#include "toruspack/pipeline.hpp"
#include "toruspack/svg.hpp"

namespace tp = toruspack;

namespace {

tp::Vec2 parse_vec(const std::string& s) {
  std::istringstream is(s);
  double x = 0, y = 0;
  char comma = 0;
  if (!(is >> x >> comma >> y) || comma != ',' || !(is >> std::ws).eof())
    throw tp::Error("expected a vector as ax,ay but got '" + s + "'");
  return {x, y};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tp::Error("cannot write " + path.string());
  out << text;
}

int run_solve(int n, const std::string& v1s, const std::string& v2s, bool as_json,
              const std::string& svg_path) {
  tp::require_supported_n(n);
  const auto sf = tp::reduce_to_standard_basis({parse_vec(v1s), parse_vec(v2s)});
  const auto s = tp::optimal_centers(n, sf.point);
  const double scale = 1.0 / sf.transform.scale;
  if (as_json) {
    std::cout << tp::solution_json(s, sf.transform).dump(2) << "\n";
  } else {
    const auto p = s.packing();
    const auto g = tp::extract_graph(p, tp::kBoundaryTol);
    std::cout << "standard torus: x = " << fmt(s.m.x) << ", y = " << fmt(s.m.y) << "\n"
              << "scale: " << fmt(scale) << (sf.transform.reflected ? " (reflected)" : "") << "\n"
              << "region: " << s.region.name() << (s.region.boundary.any() ? " (boundary)" : "")
              << "\n"
              << "radius: " << fmt(s.radius) << "\n"
              << "radius on the input torus: " << fmt(s.radius * scale) << "\n"
              << "density: " << fmt(tp::density(p)) << "\n"
              << "tangencies: " << g.edge_count() << " (loops " << g.loop_count() << ")\n"
              << "centers:\n";
    for (const auto& c : s.centers) std::cout << "  " << fmt(c.u) << " " << fmt(c.w) << "\n";
  }
  if (!svg_path.empty()) {
    const auto p = s.packing();
    write_file(svg_path, tp::render_packing(p, tp::extract_graph(p, tp::kBoundaryTol)));
  }
  return 0;
}

int run_pipeline(const tp::PipelineOptions& opt, const std::string& out_dir, bool strict) {
  namespace fs = std::filesystem;
  tp::expected_counts(opt.n);  // rejects unsupported n
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  const auto stage = tp::run_embedding_stage(opt.n, true);
  write_file(dir / "census.json", tp::census_json(stage).dump(2) + "\n");
  write_file(dir / "embeddings.json", tp::embeddings_json(stage).dump(2) + "\n");
  const auto rep = tp::run_pipeline(opt, stage);
  write_file(dir / "verdicts.json", tp::json(rep).dump(2) + "\n");
  const std::string table = tp::summary_table(rep);
  write_file(dir / "summary.txt", table);
  if (!opt.skip_oracle) {
    std::ostringstream csv;
    tp::write_comparison_csv(csv, rep.comparisons);
    write_file(dir / "comparisons.csv", csv.str());
  }
  std::cout << table;
  int status = 0;
  for (const auto& c : rep.checks) {
    if (c.ok()) continue;
    std::cerr << (strict ? "error" : "warning") << ": " << c.name << " expected " << c.expected
              << ", got " << c.actual << "\n";
    if (strict) status = 1;
  }
  return status;
}

int run_verify(int n, int samples, std::uint64_t seed, int restarts, const std::string& csv_path) {
  tp::require_supported_n(n);
  std::vector<tp::ModuliPoint> points;
  for (int k = 1; k <= tp::region_count(n); ++k)
    for (const auto& m : tp::sample_region(n, k, samples, seed)) points.push_back(m);
  // Points on each interior boundary curve as well.
  auto rng = tp::seeded_rng(seed, 7919);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int k = 1; k < tp::region_count(n); ++k) {
    for (int s = 0; s < std::max(1, samples / 4);) {
      const double x = 0.5 * unit(rng);
      const tp::ModuliPoint m{x, tp::region_curve(n, k, x)};
      if (m.y <= tp::region_curve(n, k - 1, x) + 1e-6) continue;
      points.push_back(m);
      ++s;
    }
  }
  std::vector<tp::ComparisonReport> rows;
  for (const auto& m : points)
    rows.push_back(tp::compare_with_closed_form(n, m, {restarts, seed, 4}));
  std::ostringstream csv;
  tp::write_comparison_csv(csv, rows);
  if (csv_path.empty()) std::cout << csv.str();
  else write_file(csv_path, csv.str());

  int bad = 0;
  double worst = 0.0;
  for (const auto& r : rows) {
    worst = std::max(worst, r.gap);
    if (r.gap > 1e-3 || !r.oracle_within_bound) {
      ++bad;
      std::cerr << "mismatch at (" << fmt(r.m.x) << ", " << fmt(r.m.y) << "): formula "
                << fmt(r.formula_radius) << ", oracle " << fmt(r.oracle_radius) << "\n";
    }
  }
  std::cerr << rows.size() << " points, worst gap " << fmt(worst) << ", " << bad << " failures\n";
  return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal packings of 2, 3 and 4 equal circles on flat tori"};
  app.require_subcommand(1);

  int solve_n = 2;
  std::string v1 = "1,0", v2;
  bool as_json = false;
  std::string svg_path;
  auto* solve = app.add_subcommand("solve", "closed-form optimum on one torus");
  solve->add_option("--n", solve_n, "number of circles (2..4)")->required();
  solve->add_option("--v1", v1, "first lattice generator ax,ay");
  solve->add_option("--v2", v2, "second lattice generator bx,by")->required();
  solve->add_flag("--json", as_json, "print JSON instead of text");
  solve->add_option("--svg", svg_path, "also write an SVG figure of the packing");

  tp::PipelineOptions popt;
  std::string out_dir;
  bool lenient = false;
  auto* pipeline = app.add_subcommand("pipeline", "census, embeddings, filters, realization");
  pipeline->add_option("--n", popt.n, "3 or 4")->required();
  pipeline->add_flag("--skip-oracle", popt.skip_oracle, "skip realization and the oracle");
  pipeline->add_option("--out", out_dir, "output directory")->required();
  pipeline->add_option("--seed", popt.seed, "random seed");
  pipeline->add_option("--attempts", popt.realization_attempts, "realization attempts per ECG");
  pipeline->add_flag("--no-strict", lenient, "report count mismatches as warnings");

  int verify_n = 2, samples = 20, restarts = 200;
  std::uint64_t seed = 1;
  std::string csv_path;
  auto* verify = app.add_subcommand("verify", "closed form against the numeric optimizer");
  verify->add_option("--n", verify_n, "number of circles (2..4)")->required();
  verify->add_option("--samples", samples, "points per region");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--restarts", restarts, "optimizer restarts per point");
  verify->add_option("--csv", csv_path, "write the CSV here instead of stdout");

  auto* moduli = app.add_subcommand("moduli", "SVG of the region diagram");
  int moduli_n = 4;
  std::string moduli_out;
  moduli->add_option("--n", moduli_n, "number of circles (2..4)")->required();
  moduli->add_option("--svg", moduli_out, "output path")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*solve) return run_solve(solve_n, v1, v2, as_json, svg_path);
    if (*pipeline) return run_pipeline(popt, out_dir, !lenient);
    if (*verify) return run_verify(verify_n, samples, seed, restarts, csv_path);
    if (*moduli) {
      write_file(moduli_out, tp::render_moduli(moduli_n));
      return 0;
    }
  } catch (const tp::DegenerateLattice& e) {
    std::cerr << "degenerate lattice: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
