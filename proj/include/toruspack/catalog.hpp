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

// The embedding stage of the pipeline (census -> toroidal embeddings ->
// filters) and the conventional ECG names of the survivors.
//
// Survivors are addressed by (graph, ordinal): the census graph's canonical
// string and the 1-based position of the embedding among that graph's
// filter survivors, in enumeration order. The names are fixed by geometry:
// each optimal closed-form packing's contact graph, read back as an
// embedding, lands on the entry named for its region (see the tests).

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toruspack/census.hpp"
#include "toruspack/embedding.hpp"
#include "toruspack/face_filters.hpp"

namespace toruspack {

struct EmbeddingRecord {
  int graph_index = 0;      // 1-based over the stage-3 census, n = 3 first
  std::string graph;        // canonical string
  int embedding_index = 0;  // 1-based among all embeddings of the graph
  int survivor_ordinal = 0; // 1-based among both-filter survivors, else 0
  EmbeddedGraph embedding;
  FaceFilterVerdict face;
  ParallelChainVerdict chain;
  std::string name;         // ECG name when catalogued
};

struct EmbeddingStage {
  int n = 0;
  CensusResult census;
  std::vector<EmbeddingRecord> records;

  std::size_t embeddings() const { return records.size(); }
  std::size_t after_face() const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.face.keep;
    return c;
  }
  std::size_t after_both() const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.face.keep && r.chain.keep;
    return c;
  }
  std::size_t after_congruence() const {
    std::size_t c = 0;
    for (const auto& r : records) c += r.face.keep && r.chain.keep && r.chain.congruence_keep;
    return c;
  }
};

struct CatalogEntry {
  const char* name;
  const char* graph;
  int ordinal;
  const char* role;
};

// Every both-filter survivor except one: the (2,1,1,1,0,2) survivor removed
// by the congruence analysis has no conventional name that fits its graph.
inline const std::vector<CatalogEntry>& ecg_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"ECG1-1", "3:2,2,1", 2, "optimal on the interior of R1_3"},
      {"ECG1-2", "3:2,2,1", 1, "optimal on the interior of R2_3"},
      {"ECG2-1", "3:2,2,2", 2, "optimal on the upper edge of R1_3"},
      {"ECG2-2", "3:2,2,2", 3, "realizable, never locally maximally dense"},
      {"ECG2-3", "3:2,2,2", 1, "optimal on the right edge of R2_3"},
      {"ECG3-1", "3:3,3,3", 1, "triangular close packing"},
      {"ECG4-1", "4:2,1,1,1,1,1", 3, "realizable, never locally maximally dense"},
      {"ECG4-2", "4:2,1,1,1,1,1", 4, "locally but not globally maximally dense"},
      {"ECG4-3", "4:2,1,1,1,1,1", 1, "no equal-edge realization"},
      {"ECG4-4", "4:2,1,1,1,1,1", 2, "no equal-edge realization"},
      {"ECG6-1", "4:2,1,1,1,0,2", 2, "realizable, never locally maximally dense"},
      {"ECG7-1", "4:2,2,0,0,2,1", 1, "optimal on the interior of R3_4"},
      {"ECG9-1", "4:2,1,1,1,1,2", 3, "optimal on the interior of R2_4"},
      {"ECG9-2", "4:2,1,1,1,1,2", 1, "no equal-edge realization (congruence)"},
      {"ECG9-3", "4:2,1,1,1,1,2", 2, "no equal-edge realization (congruence)"},
      {"ECG9-4", "4:2,1,1,1,1,2", 4, "realizable, never locally maximally dense"},
      {"ECG10-1", "4:2,2,1,1,2,0", 1, "no equal-edge realization (congruence)"},
      {"ECG10-2", "4:2,2,1,1,2,0", 2, "no equal-edge realization (congruence)"},
      {"ECG13-1", "4:2,2,0,0,2,2", 1, "optimal on the left edge of R3_4"},
      {"ECG13-2", "4:2,2,0,0,2,2", 2, "realizable, never locally maximally dense"},
      {"ECG16-1", "4:2,2,1,1,2,1", 1, "optimal on the upper edge of R2_4"},
      {"ECG18-1", "4:2,2,1,0,2,2", 1, "optimal on the interior of R1_4"},
      {"ECG20-1", "4:2,2,1,1,2,2", 1, "optimal on the left edge of R1_4"},
      {"ECG20-2", "4:2,2,1,1,2,2", 2, "optimal on the upper edge of R1_4"},
      {"ECG23-1", "4:2,2,2,2,2,2", 2, "triangular close packing at (1/2, sqrt3/2)"},
      {"ECG23-2", "4:2,2,2,2,2,2", 1, "triangular close packing at (0, 2/sqrt3)"},
  };
  return entries;
}

inline std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  for (const auto& e : ecg_catalog())
    if (name == e.name) return e;
  return std::nullopt;
}

inline std::string catalog_name(const std::string& graph, int ordinal) {
  for (const auto& e : ecg_catalog())
    if (graph == e.graph && ordinal == e.ordinal) return e.name;
  return {};
}

// Census, embeddings and both filters for n = 3 or 4. Graph indices continue
// across n (the n = 4 census starts after the three n = 3 graphs).
inline EmbeddingStage run_embedding_stage(int n, bool with_congruence = true) {
  EmbeddingStage st;
  st.n = n;
  st.census = enumerate_census(n);
  const int offset = n == 4 ? static_cast<int>(enumerate_census(3).stage3.size()) : 0;
  int gi = offset;
  for (const auto& g : st.census.stage3) {
    ++gi;
    const std::string gs = canonical_string(canonicalize(g));
    auto en = enumerate_toroidal(g);
    int ei = 0, ordinal = 0;
    for (auto& e : en.embeddings) {
      EmbeddingRecord rec;
      rec.graph_index = gi;
      rec.graph = gs;
      rec.embedding_index = ++ei;
      rec.face = forbidden_face_filter(e);
      rec.chain = parallel_chain_filter(e, with_congruence);
      if (rec.face.keep && rec.chain.keep) {
        rec.survivor_ordinal = ++ordinal;
        rec.name = catalog_name(gs, ordinal);
      }
      rec.embedding = std::move(e);
      st.records.push_back(std::move(rec));
    }
  }
  return st;
}

// The catalogued embedding with the given ECG name.
inline std::optional<EmbeddedGraph> named_embedding(std::string_view name) {
  const auto entry = find_catalog_entry(name);
  if (!entry) return std::nullopt;
  const int n = entry->graph[0] - '0';
  for (const auto& g : enumerate_census(n).stage3) {
    if (canonical_string(canonicalize(g)) != entry->graph) continue;
    int ordinal = 0;
    for (auto& e : enumerate_toroidal(g).embeddings) {
      if (!forbidden_face_filter(e).keep || !parallel_chain_filter(e).keep) continue;
      if (++ordinal == entry->ordinal) return std::move(e);
    }
  }
  return std::nullopt;
}

}  // namespace toruspack
