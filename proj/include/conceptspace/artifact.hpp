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
// Artifacts: (header, support, witness) triples tied to a space, plus the
// set operations over them — locate, similarity, induce, generate.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conceptspace/error.hpp"
#include "conceptspace/space.hpp"

namespace conceptspace {

// The header domain is configuration, not code; this is the stock set used
// when a caller supplies none.
inline const std::set<std::string>& default_headers() {
  static const std::set<std::string> kHeaders{
      "law",           "measuring-technique", "open-question",
      "phenomenon",    "technique",           "theory",
  };
  return kHeaders;
}

// A scientific artifact: a statement of kind `header`, intelligible only
// under the joint assumption of the `support` constraints, witnessed by one
// concrete string admitted by all of them.
struct Artifact {
  std::string header;
  std::set<ConstraintId> support;
  std::string witness;

  friend auto operator<=>(const Artifact&, const Artifact&) = default;
};

struct ArtifactReport {
  // True when at least one support vertex carries no extensional content, so
  // the witness-membership check was vacuous there.
  bool unverified = false;
};

// Validates `artifact` against `space`: known header, nonempty support, all
// support ids present, and witness contained in every present support
// content. Support vertices without content make the artifact unverified
// rather than invalid.
inline ArtifactReport validate_artifact(const ConceptualSpace& space, const Artifact& artifact,
                                        const std::set<std::string>& headers = default_headers()) {
  if (!headers.count(artifact.header))
    throw Error(ErrorCode::UnknownHeader, "'" + artifact.header + "'");
  if (artifact.support.empty())
    throw Error(ErrorCode::EmptySupport, "artifact support is empty");
  ArtifactReport report;
  for (const ConstraintId& id : artifact.support) {
    const ConstraintVertex& v = space.vertex(id);  // throws UnknownVertex
    if (!v.content) {
      report.unverified = true;
    } else if (!v.content->count(artifact.witness)) {
      throw Error(ErrorCode::WitnessNotInIntersection,
                  "witness '" + artifact.witness + "' is not in the content of " + id.str());
    }
  }
  return report;
}

inline Artifact make_artifact(const ConceptualSpace& space, std::string header,
                              std::set<ConstraintId> support, std::string witness,
                              const std::set<std::string>& headers = default_headers()) {
  Artifact artifact{std::move(header), std::move(support), std::move(witness)};
  validate_artifact(space, artifact, headers);
  return artifact;
}

// Where an artifact lives in a space: its support, and everything that must
// be assumed for the support to be intelligible.
struct Location {
  std::set<ConstraintId> support;
  std::set<ConstraintId> closure;  // support plus prereq of every support vertex

  friend bool operator==(const Location&, const Location&) = default;
};

inline Location locate(const ConceptualSpace& space, const Artifact& artifact) {
  Location loc;
  loc.support = artifact.support;
  for (const ConstraintId& id : artifact.support) {
    loc.closure.insert(id);
    for (const ConstraintId& p : prereq_of(space, id)) loc.closure.insert(p);
  }
  return loc;
}

// An exact nonnegative rational, kept reduced. Used wherever a derived
// quantity must be compared without floating-point noise.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Rational make(std::uint64_t num, std::uint64_t den) {
    std::uint64_t g = std::gcd(num, den);
    return Rational{num / g, den / g};
  }

  // Decimal rendering with six places, for display only.
  std::string decimal() const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
  }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

// Jaccard similarity of the support sets, exactly. Headers and witnesses do
// not participate.
inline Rational similarity(const Artifact& a, const Artifact& b) {
  if (a.support.empty() || b.support.empty())
    throw Error(ErrorCode::EmptySupport, "artifact support is empty");
  std::vector<ConstraintId> common;
  std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                        std::back_inserter(common));
  std::set<ConstraintId> all = a.support;
  all.insert(b.support.begin(), b.support.end());
  return Rational::make(common.size(), all.size());
}

namespace detail {

inline bool strict_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// Builds a space from artifacts alone: the vertices are the union of the
// supports, and the edges are the transitive reduction of the strict-subset
// order on the given contents. Vertices are labeled by their id; each input
// artifact validates against the result.
inline ConceptualSpace induce_space(std::string name, const std::vector<Artifact>& artifacts,
                                    const std::map<ConstraintId, std::set<std::string>>& contents) {
  if (artifacts.empty()) throw Error(ErrorCode::EmptyArtifactList, "no artifacts to induce from");
  std::set<ConstraintId> universe;
  for (const Artifact& a : artifacts) {
    if (a.support.empty()) throw Error(ErrorCode::EmptySupport, "artifact support is empty");
    universe.insert(a.support.begin(), a.support.end());
  }
  for (const ConstraintId& id : universe) {
    if (!contents.count(id)) throw Error(ErrorCode::MissingContent, id.str());
  }
  for (auto i = universe.begin(); i != universe.end(); ++i) {
    for (auto j = std::next(i); j != universe.end(); ++j) {
      if (contents.at(*i) == contents.at(*j))
        throw Error(ErrorCode::DuplicateContent,
                    i->str() + " and " + j->str() + " have identical content");
    }
  }
  // Full strict-subset order, then drop edges implied by a two-step path.
  std::set<Edge> full;
  for (const ConstraintId& u : universe) {
    for (const ConstraintId& v : universe) {
      if (u != v && detail::strict_subset(contents.at(u), contents.at(v))) full.insert(Edge{u, v});
    }
  }
  std::vector<Edge> reduced;
  for (const Edge& e : full) {
    bool implied = false;
    for (const ConstraintId& w : universe) {
      if (w != e.from && w != e.to && full.count(Edge{e.from, w}) && full.count(Edge{w, e.to})) {
        implied = true;
        break;
      }
    }
    if (!implied) reduced.push_back(e);
  }
  std::vector<ConstraintVertex> vertices;
  for (const ConstraintId& id : universe)
    vertices.push_back(ConstraintVertex{id, id.str(), contents.at(id), {}});
  return build_space(std::move(name), std::move(vertices), std::move(reduced));
}

// Generates the canonical artifact for a support set: the witness is the
// lexicographically smallest string admitted by every support vertex.
inline Artifact generate_artifact(const ConceptualSpace& space, std::string header,
                                  const std::set<ConstraintId>& support,
                                  const std::set<std::string>& headers = default_headers()) {
  if (!headers.count(header)) throw Error(ErrorCode::UnknownHeader, "'" + header + "'");
  if (support.empty()) throw Error(ErrorCode::EmptySupport, "artifact support is empty");
  bool first = true;
  std::set<std::string> common;
  for (const ConstraintId& id : support) {
    const ConstraintVertex& v = space.vertex(id);  // throws UnknownVertex
    if (!v.content)
      throw Error(ErrorCode::IntensionalSupport, id.str() + " has no extensional content");
    if (first) {
      common = *v.content;
      first = false;
    } else {
      std::set<std::string> next;
      std::set_intersection(common.begin(), common.end(), v.content->begin(), v.content->end(),
                            std::inserter(next, next.begin()));
      common = std::move(next);
    }
  }
  if (common.empty())
    throw Error(ErrorCode::EmptyIntersection, "support contents have an empty intersection");
  return make_artifact(space, std::move(header), support, *common.begin(), headers);
}

}  // namespace conceptspace
