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

// JSON and CSV output. Every top-level JSON record carries "schema": 1, and
// reading a record with any other schema throws. Doubles are written by
// nlohmann::json's shortest round-trip formatting, so values read back equal.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "toruspack/catalog.hpp"
#include "toruspack/closed_form.hpp"
#include "toruspack/pipeline.hpp"

namespace toruspack {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline void check_schema(const json& j) {
  if (!j.contains("schema") || j.at("schema").get<int>() != kSchemaVersion)
    throw Error("unsupported or missing JSON schema version");
}

}  // namespace detail

// Nested values (no schema field of their own).

inline void to_json(json& j, const Vec2& v) { j = json::array({v.x, v.y}); }
inline void from_json(const json& j, Vec2& v) { v = {j.at(0).get<double>(), j.at(1).get<double>()}; }

inline void to_json(json& j, const ModuliPoint& m) { j = {{"x", m.x}, {"y", m.y}}; }
inline void from_json(const json& j, ModuliPoint& m) {
  m = {j.at("x").get<double>(), j.at("y").get<double>()};
}

inline void to_json(json& j, const TorusPoint& p) { j = json::array({p.u, p.w}); }
inline void from_json(const json& j, TorusPoint& p) {
  p = {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline void to_json(json& j, const PackingEdge& e) {
  j = {{"i", e.i}, {"j", e.j}, {"a", e.d.a}, {"b", e.d.b}, {"vector", e.d.vec}};
}
inline void from_json(const json& j, PackingEdge& e) {
  e.i = j.at("i").get<int>();
  e.j = j.at("j").get<int>();
  e.d.a = j.at("a").get<std::int64_t>();
  e.d.b = j.at("b").get<std::int64_t>();
  e.d.vec = j.at("vector").get<Vec2>();
}

inline void to_json(json& j, const CountCheck& c) {
  j = {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}};
}
inline void from_json(const json& j, CountCheck& c) {
  c.name = j.at("name").get<std::string>();
  c.expected = j.at("expected").get<long long>();
  c.actual = j.at("actual").get<long long>();
}

inline json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }
inline std::optional<bool> read_optional_bool(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<bool>();
}

inline void to_json(json& j, const EcgVerdict& v) {
  j = {{"graph_index", v.graph_index},
       {"graph", v.graph},
       {"embedding_index", v.embedding_index},
       {"name", v.name},
       {"faces", v.faces},
       {"congruence_keep", v.congruence_keep},
       {"realization", v.realization_run ? json("run") : json("skipped")},
       {"attempts", v.attempts},
       {"samples", v.samples},
       {"rigid", v.rigid},
       {"flexible", v.flexible},
       {"free_circle", v.free_circle},
       {"realizable", optional_bool(v.realizable)},
       {"lmd", optional_bool(v.lmd)},
       {"sample_regions", v.sample_regions},
       {"gmd_regions", v.gmd_regions}};
}
inline void from_json(const json& j, EcgVerdict& v) {
  v.graph_index = j.at("graph_index").get<int>();
  v.graph = j.at("graph").get<std::string>();
  v.embedding_index = j.at("embedding_index").get<int>();
  v.name = j.at("name").get<std::string>();
  v.faces = j.at("faces").get<std::vector<int>>();
  v.congruence_keep = j.at("congruence_keep").get<bool>();
  v.realization_run = j.at("realization").get<std::string>() == "run";
  v.attempts = j.at("attempts").get<int>();
  v.samples = j.at("samples").get<int>();
  v.rigid = j.at("rigid").get<int>();
  v.flexible = j.at("flexible").get<int>();
  v.free_circle = j.at("free_circle").get<int>();
  v.realizable = read_optional_bool(j.at("realizable"));
  v.lmd = read_optional_bool(j.at("lmd"));
  v.sample_regions = j.at("sample_regions").get<std::vector<std::string>>();
  v.gmd_regions = j.at("gmd_regions").get<std::vector<std::string>>();
}

inline void to_json(json& j, const ComparisonReport& r) {
  j = {{"n", r.n},
       {"m", r.m},
       {"region", r.region.name()},
       {"region_index", r.region.index},
       {"boundary", {{"lower", r.region.boundary.lower}, {"upper", r.region.boundary.upper},
                     {"left", r.region.boundary.left}, {"right", r.region.boundary.right}}},
       {"formula_radius", r.formula_radius},
       {"oracle_radius", r.oracle_radius},
       {"gap", r.gap},
       {"oracle_within_bound", r.oracle_within_bound},
       {"restarts", r.restarts},
       {"seed", r.seed},
       {"converged_fraction", r.converged_fraction}};
}
inline void from_json(const json& j, ComparisonReport& r) {
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<ModuliPoint>();
  r.region.n = r.n;
  r.region.index = j.at("region_index").get<int>();
  const auto& b = j.at("boundary");
  r.region.boundary = {b.at("lower").get<bool>(), b.at("upper").get<bool>(),
                       b.at("left").get<bool>(), b.at("right").get<bool>()};
  r.formula_radius = j.at("formula_radius").get<double>();
  r.oracle_radius = j.at("oracle_radius").get<double>();
  r.gap = j.at("gap").get<double>();
  r.oracle_within_bound = j.at("oracle_within_bound").get<bool>();
  r.restarts = j.at("restarts").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.converged_fraction = j.at("converged_fraction").get<double>();
}

// Top-level records.

inline void to_json(json& j, const Packing& p) {
  j = {{"schema", kSchemaVersion}, {"m", p.m}, {"radius", p.radius}, {"centers", p.centers}};
}
inline void from_json(const json& j, Packing& p) {
  detail::check_schema(j);
  p.m = j.at("m").get<ModuliPoint>();
  p.radius = j.at("radius").get<double>();
  p.centers = j.at("centers").get<std::vector<TorusPoint>>();
}

inline void to_json(json& j, const PackingGraph& g) {
  j = {{"schema", kSchemaVersion}, {"vertex_count", g.vertex_count}, {"edges", g.edges}};
}
inline void from_json(const json& j, PackingGraph& g) {
  detail::check_schema(j);
  g.vertex_count = j.at("vertex_count").get<int>();
  g.edges = j.at("edges").get<std::vector<PackingEdge>>();
}

inline void to_json(json& j, const PipelineReport& r) {
  j = {{"schema", r.schema},
       {"n", r.n},
       {"seed", r.seed},
       {"oracle", r.oracle_skipped ? "skipped" : "run"},
       {"census", {{"stage1", r.stage1}, {"stage2", r.stage2}, {"stage3", r.stage3}}},
       {"embeddings", r.embeddings},
       {"filters", {{"after_face", r.after_face}, {"after_both", r.after_both},
                    {"after_congruence", r.after_congruence}}},
       {"summary", r.summary()},
       {"checks", r.checks},
       {"ecgs", r.ecgs},
       {"comparisons", r.comparisons}};
}
inline void from_json(const json& j, PipelineReport& r) {
  detail::check_schema(j);
  r.schema = j.at("schema").get<int>();
  r.n = j.at("n").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.oracle_skipped = j.at("oracle").get<std::string>() == "skipped";
  const auto& c = j.at("census");
  r.stage1 = c.at("stage1").get<std::size_t>();
  r.stage2 = c.at("stage2").get<std::size_t>();
  r.stage3 = c.at("stage3").get<std::size_t>();
  r.embeddings = j.at("embeddings").get<std::size_t>();
  const auto& f = j.at("filters");
  r.after_face = f.at("after_face").get<std::size_t>();
  r.after_both = f.at("after_both").get<std::size_t>();
  r.after_congruence = f.at("after_congruence").get<std::size_t>();
  r.checks = j.at("checks").get<std::vector<CountCheck>>();
  r.ecgs = j.at("ecgs").get<std::vector<EcgVerdict>>();
  r.comparisons = j.at("comparisons").get<std::vector<ComparisonReport>>();
}

// Output of `solve`: the closed-form answer on the reduced torus. Tangencies
// use the boundary tolerance because inputs that close to a region curve are
// treated as lying on it.
inline json solution_json(const OptimalSolution& s, const BasisTransform& t) {
  const auto p = s.packing();
  const auto g = extract_graph(p, kBoundaryTol);
  return {{"schema", kSchemaVersion},
          {"n", s.n},
          {"m", s.m},
          {"region", s.region.name()},
          {"on_boundary", s.region.boundary.any()},
          {"radius", s.radius},
          {"input_scale", 1.0 / t.scale},
          {"input_radius", s.radius / t.scale},
          {"centers", s.centers},
          {"tangencies", g.edge_count()},
          {"loops", g.loop_count()},
          {"density", density(p)},
          {"graph", g}};
}

// Stage-3 census graphs of one n.
inline json census_json(const EmbeddingStage& st) {
  json graphs = json::array();
  int offset = st.records.empty() ? 1 : st.records.front().graph_index;
  for (std::size_t k = 0; k < st.census.stage3.size(); ++k) {
    const auto& g = st.census.stage3[k];
    json edges = json::array();
    for (const auto& [u, v] : g.edge_list()) edges.push_back({u, v});
    graphs.push_back({{"index", offset + static_cast<int>(k)},
                      {"canonical", canonical_string(canonicalize(g))},
                      {"edges", edges}});
  }
  return {{"schema", kSchemaVersion},
          {"n", st.n},
          {"counts", {st.census.stage1.size(), st.census.stage2.size(), st.census.stage3.size()}},
          {"graphs", graphs}};
}

inline json embeddings_json(const EmbeddingStage& st) {
  json list = json::array();
  for (const auto& r : st.records) {
    std::vector<int> sizes;
    for (const auto& f : r.embedding.faces) sizes.push_back(static_cast<int>(f.size()));
    json chain = {{"keep", r.chain.keep}, {"vector_classes", r.chain.vector_classes}};
    if (!r.chain.keep) {
      const auto& w = r.chain.witness;
      const char* why = w.failure == ChainFailure::missing_edge       ? "missing_edge"
                        : w.failure == ChainFailure::coincident_edges ? "coincident_edges"
                        : w.failure == ChainFailure::zero_vector      ? "zero_vector"
                                                                      : "none";
      chain["failure"] = why;
      chain["darts"] = {{"x", w.x}, {"y", w.y}, {"z", w.z}};
      chain["required_voltage"] = {w.required[0], w.required[1]};
    }
    chain["congruence_keep"] = r.chain.congruence_keep;
    list.push_back({{"graph_index", r.graph_index},
                    {"graph", r.graph},
                    {"embedding_index", r.embedding_index},
                    {"edges", r.embedding.darts.edges},
                    {"rotation", r.embedding.rotation.cyclic},
                    {"faces", r.embedding.faces},
                    {"face_sizes", sizes},
                    {"face_filter", {{"keep", r.face.keep},
                                     {"vertex", r.face.vertex},
                                     {"pattern", r.face.pattern}}},
                    {"chain_filter", chain},
                    {"survivor_ordinal", r.survivor_ordinal},
                    {"name", r.name}});
  }
  return {{"schema", kSchemaVersion}, {"n", st.n}, {"embeddings", list}};
}

// RFC 4180: quote fields containing a comma, quote, CR or LF; double quotes.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) os << ',';
    os << csv_field(fields[k]);
  }
  os << "\r\n";
}

inline void write_comparison_csv(std::ostream& os, const std::vector<ComparisonReport>& rows) {
  write_csv_row(os, {"n", "x", "y", "region", "formula_r", "oracle_r", "gap", "restarts", "seed"});
  for (const auto& r : rows)
    write_csv_row(os, {std::to_string(r.n), csv_number(r.m.x), csv_number(r.m.y), r.region.name(),
                       csv_number(r.formula_radius), csv_number(r.oracle_radius),
                       csv_number(r.gap), std::to_string(r.restarts), std::to_string(r.seed)});
}

// Plain-text count table followed by one row per surviving embedding.
inline std::string summary_table(const PipelineReport& r) {
  std::string s;
  s += "n = " + std::to_string(r.n) + "\n";
  s += "census (stage1/stage2/stage3): " + std::to_string(r.stage1) + "/" +
       std::to_string(r.stage2) + "/" + std::to_string(r.stage3) + "\n";
  s += "toroidal embeddings: " + std::to_string(r.embeddings) + "\n";
  s += "after forbidden-face filter: " + std::to_string(r.after_face) + "\n";
  s += "after parallel-chain filter: " + std::to_string(r.after_both) + "\n";
  s += "after congruence analysis: " + std::to_string(r.after_congruence) + "\n";
  s += "summary: " + r.summary() + "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-16s %-5s %-12s %-11s %-9s %-6s %s\n", "ECG", "graph",
                "emb", "faces", "realizable", "samples", "LMD", "optimal on");
  s += line;
  for (const auto& v : r.ecgs) {
    std::string faces;
    for (int f : v.faces) faces += std::to_string(f);
    std::string gmd;
    for (const auto& g : v.gmd_regions) gmd += (gmd.empty() ? "" : "; ") + g;
    const std::string real = !v.realization_run ? "skipped" : (*v.realizable ? "yes" : "no");
    const std::string lmd = !v.lmd ? "-" : (*v.lmd ? "yes" : "no");
    std::snprintf(line, sizeof line, "%-8s %-16s %-5d %-12s %-11s %-9d %-6s %s\n",
                  v.name.empty() ? "-" : v.name.c_str(), v.graph.c_str(), v.embedding_index,
                  faces.c_str(), real.c_str(), v.samples, lmd.c_str(), gmd.c_str());
    s += line;
  }
  return s;
}

}  // namespace toruspack
