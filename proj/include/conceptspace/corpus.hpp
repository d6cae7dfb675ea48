#pragma once
// Copyright 2026 The conceptspace Authors
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
//
// The bundled historical corpus: three well-known paradigm shifts, each as a
// (source, destination) pair of spaces with the forward script stored on the
// source entry. Where a shift's dependency structure is not literally given
// by the historical record, vertices carry a meta note marking the encoding
// as interpretive.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conceptspace/document.hpp"
#include "conceptspace/error.hpp"
#include "conceptspace/space.hpp"
#include "conceptspace/transform.hpp"

namespace conceptspace {

namespace detail {

inline ConstraintVertex corpus_vertex(const char* id, const char* label,
                                      std::map<std::string, std::string> meta = {}) {
  return ConstraintVertex{ConstraintId(id), label, std::nullopt, std::move(meta)};
}

inline Edge corpus_edge(const char* from, const char* to) {
  return Edge{ConstraintId(from), ConstraintId(to)};
}

inline std::map<std::string, SpaceDocument> build_corpus() {
  const std::map<std::string, std::string> split{
      {"note", "split from a composite axiom statement"}};
  const std::map<std::string, std::string> interpretive{
      {"note", "interpretive dependency encoding"}};

  ConceptualSpace geocentric = build_space(
      "geocentric",
      {corpus_vertex("V1", "Planetary Predictions (Almagest)"),
       corpus_vertex("V2", "Epicycle-Deferent Model"),
       corpus_vertex("A1", "Earth Stationary & Central"),
       corpus_vertex("A2", "Uniform Circular Motion")},
      {corpus_edge("V1", "V2"), corpus_edge("V2", "A1"), corpus_edge("V2", "A2")});

  ConceptualSpace heliocentric = build_space(
      "heliocentric",
      {corpus_vertex("V1'", "Planetary Predictions"),
       corpus_vertex("V2'", "Heliocentric Orbital Model"),
       corpus_vertex("A1'", "Sun Central"),
       corpus_vertex("A2'", "Elliptical Orbits"),
       corpus_vertex("V3'", "Earth Rotation 24-h Day")},
      {corpus_edge("V1'", "V2'"), corpus_edge("V2'", "A1'"), corpus_edge("V2'", "A2'"),
       corpus_edge("V3'", "V2'")});

  ConceptualSpace newtonian = build_space(
      "newtonian",
      {corpus_vertex("A1", "Absolute time", split),
       corpus_vertex("A2", "Separate space and time", split),
       corpus_vertex("A3", "Gravity as force", split),
       corpus_vertex("R1", "p = mv", interpretive)},
      {corpus_edge("R1", "A1")});

  ConceptualSpace relativistic = build_space(
      "relativistic",
      {corpus_vertex("A1'", "Lorentz invariance"),
       corpus_vertex("A2'", "Constant speed of light"),
       corpus_vertex("R1'", "p = mv/√(1−v²/c²)", interpretive)},
      {corpus_edge("R1'", "A1'"), corpus_edge("R1'", "A2'")});

  ConceptualSpace euclidean = build_space(
      "euclidean",
      {corpus_vertex("A1", "Incidence and congruence postulates",
                     {{"note", "summary of the non-parallel axioms"}}),
       corpus_vertex("P", "Parallel Postulate"),
       corpus_vertex("R1", "Triangle angle sum = 180°")},
      {corpus_edge("R1", "A1"), corpus_edge("R1", "P")});

  ConceptualSpace noneuclidean = build_space(
      "noneuclidean",
      {corpus_vertex("A1", "Incidence and congruence postulates",
                     {{"note", "summary of the non-parallel axioms"}}),
       corpus_vertex("R1'", "Triangle angle sum depends on curvature", interpretive)},
      {corpus_edge("R1'", "A1")});

  std::map<std::string, SpaceDocument> corpus;
  SpaceDocument geo;
  geo.space = geocentric;
  geo.artifacts.push_back(
      Artifact{"phenomenon", {ConstraintId("V1")}, "retrograde motion of Mars"});
  geo.scripts.emplace("copernican", diff(geocentric, heliocentric));
  corpus.emplace("geocentric", std::move(geo));

  SpaceDocument helio;
  helio.space = heliocentric;
  corpus.emplace("heliocentric", std::move(helio));

  SpaceDocument newt;
  newt.space = newtonian;
  newt.scripts.emplace("einsteinian", diff(newtonian, relativistic));
  corpus.emplace("newtonian", std::move(newt));

  SpaceDocument rel;
  rel.space = relativistic;
  corpus.emplace("relativistic", std::move(rel));

  SpaceDocument euc;
  euc.space = euclidean;
  euc.scripts.emplace("lobachevskian", diff(euclidean, noneuclidean));
  corpus.emplace("euclidean", std::move(euc));

  SpaceDocument noneuc;
  noneuc.space = noneuclidean;
  corpus.emplace("noneuclidean", std::move(noneuc));
  return corpus;
}

inline const std::map<std::string, SpaceDocument>& corpus_table() {
  static const std::map<std::string, SpaceDocument> kCorpus = build_corpus();
  return kCorpus;
}

}  // namespace detail

inline std::vector<std::string> corpus_names() {
  std::vector<std::string> names;
  for (const auto& [name, unused] : detail::corpus_table()) names.push_back(name);
  return names;
}

inline SpaceDocument load_corpus(const std::string& name) {
  const auto& table = detail::corpus_table();
  auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::UnknownCorpusEntry, "'" + name + "'");
  return it->second;
}

}  // namespace conceptspace
