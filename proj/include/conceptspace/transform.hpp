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
// Transformations of a conceptual space: single vertex/edge edits, ordered
// scripts of them, impact analysis, structural diffing, and minimal revision
// of a space to admit an artifact.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "conceptspace/artifact.hpp"
#include "conceptspace/error.hpp"
#include "conceptspace/space.hpp"

namespace conceptspace {

struct AddVertex {
  ConstraintVertex vertex;
  friend bool operator==(const AddVertex&, const AddVertex&) = default;
};

struct RemoveVertex {
  ConstraintId id;
  friend bool operator==(const RemoveVertex&, const RemoveVertex&) = default;
};

// Replaces the full observable state of a vertex: the label and the content
// (absent new_content clears it). The id and the meta annotations persist.
struct ModifyVertex {
  ConstraintId id;
  std::string new_label;
  std::optional<std::set<std::string>> new_content;
  friend bool operator==(const ModifyVertex&, const ModifyVertex&) = default;
};

struct AddEdge {
  ConstraintId from;
  ConstraintId to;
  friend bool operator==(const AddEdge&, const AddEdge&) = default;
};

struct RemoveEdge {
  ConstraintId from;
  ConstraintId to;
  friend bool operator==(const RemoveEdge&, const RemoveEdge&) = default;
};

using Transformation = std::variant<AddVertex, RemoveVertex, ModifyVertex, AddEdge, RemoveEdge>;

// strict: every intermediate space must satisfy all invariants.
// lenient: subset-consistency is checked only on the final space; structural
// soundness and acyclicity are still enforced at every step, because later
// steps cannot be interpreted on a broken graph.
enum class ScriptMode { strict, lenient };

struct TransformationScript {
  ScriptMode mode = ScriptMode::strict;
  std::vector<Transformation> steps;

  friend bool operator==(const TransformationScript&, const TransformationScript&) = default;
};

namespace detail {

inline ConceptualSpace apply_impl(const ConceptualSpace& space, const Transformation& t,
                                  Checks checks) {
  ConceptualSpace::VertexMap vertices = space.vertices();
  ConceptualSpace::EdgeSet edges = space.edges();
  if (const auto* op = std::get_if<AddVertex>(&t)) {
    if (vertices.count(op->vertex.id))
      throw Error(ErrorCode::DuplicateVertexId, op->vertex.id.str());
    vertices.emplace(op->vertex.id, op->vertex);
  } else if (const auto* op = std::get_if<RemoveVertex>(&t)) {
    if (!vertices.erase(op->id)) throw Error(ErrorCode::UnknownVertex, op->id.str());
    for (auto it = edges.begin(); it != edges.end();) {
      if (it->from == op->id || it->to == op->id)
        it = edges.erase(it);
      else
        ++it;
    }
  } else if (const auto* op = std::get_if<ModifyVertex>(&t)) {
    auto it = vertices.find(op->id);
    if (it == vertices.end()) throw Error(ErrorCode::UnknownVertex, op->id.str());
    it->second.label = op->new_label;
    it->second.content = op->new_content;
  } else if (const auto* op = std::get_if<AddEdge>(&t)) {
    if (!vertices.count(op->from)) throw Error(ErrorCode::UnknownVertex, op->from.str());
    if (!vertices.count(op->to)) throw Error(ErrorCode::UnknownVertex, op->to.str());
    if (!edges.insert(Edge{op->from, op->to}).second)
      throw Error(ErrorCode::DuplicateEdge, "(" + op->from.str() + ", " + op->to.str() + ")");
  } else {
    const auto& rm = std::get<RemoveEdge>(t);
    if (!edges.erase(Edge{rm.from, rm.to}))
      throw Error(ErrorCode::UnknownEdge, "(" + rm.from.str() + ", " + rm.to.str() + ")");
  }
  return make_space(space.name(), std::move(vertices), std::move(edges), checks);
}

}  // namespace detail

// Applies one transformation, returning the new space; the input is never
// mutated and no partial edit is observable on failure.
inline ConceptualSpace apply(const ConceptualSpace& space, const Transformation& t) {
  return detail::apply_impl(space, t, detail::Checks::full);
}

// Applies a whole script. Failures carry the 1-based index of the offending
// step; a lenient script that ends subset-inconsistent fails with index
// steps.size() + 1, marking the final whole-space validation.
inline ConceptualSpace apply_script(const ConceptualSpace& space,
                                    const TransformationScript& script) {
  const detail::Checks checks = script.mode == ScriptMode::strict ? detail::Checks::full
                                                                  : detail::Checks::skip_subset;
  ConceptualSpace current = space;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      current = detail::apply_impl(current, script.steps[i], checks);
    } catch (const Error& e) {
      throw ScriptError(i + 1, e.code(), e.what());
    }
  }
  if (script.mode == ScriptMode::lenient) {
    try {
      current = detail::make_space(current.name(), current.vertices(), current.edges(),
                                   detail::Checks::full);
    } catch (const Error& e) {
      throw ScriptError(script.steps.size() + 1, e.code(), e.what());
    }
  }
  return current;
}

struct AxiomChanges {
  std::set<ConstraintId> gained;
  std::set<ConstraintId> lost;

  friend bool operator==(const AxiomChanges&, const AxiomChanges&) = default;
};

// Axioms that appear or disappear between two spaces.
inline AxiomChanges axiom_changes(const ConceptualSpace& before, const ConceptualSpace& after) {
  const std::set<ConstraintId> a = axioms(before);
  const std::set<ConstraintId> b = axioms(after);
  AxiomChanges changes;
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::inserter(changes.gained, changes.gained.begin()));
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(changes.lost, changes.lost.begin()));
  return changes;
}

// What a content modification of `target` can restructure, measured on the
// space as it stands before the edit.
struct ImpactReport {
  ConstraintId target;
  std::size_t potential = 0;           // |depends(target)|
  std::set<ConstraintId> touched;      // {target} plus its dependents
  AxiomChanges axiom_changes;          // empty: a content edit keeps the graph

  friend bool operator==(const ImpactReport&, const ImpactReport&) = default;
};

inline ImpactReport impact(const ConceptualSpace& space, const ConstraintId& target) {
  std::set<ConstraintId> deps = depends_of(space, target);
  ImpactReport report{target, deps.size(), std::move(deps), {}};
  report.touched.insert(target);
  return report;
}

// The model measures modification impact for vertices only; what an edge
// edit is worth has no agreed formula here.
[[noreturn]] inline ImpactReport impact_of_edge(const ConceptualSpace&, const Edge& edge) {
  throw Error(ErrorCode::ImpactUnsupported,
              "no impact measure is defined for edge (" + edge.from.str() + ", " + edge.to.str() + ")");
}

namespace detail {

struct DiffParts {
  std::vector<Edge> removed_edges;              // survive both endpoints, dropped
  std::vector<ConstraintId> removed_vertices;   // in source only
  std::vector<ModifyVertex> modified;           // shared id, new label/content
  std::vector<ConstraintVertex> added_vertices; // in dest only
  std::vector<Edge> added_edges;                // in dest only

  TransformationScript script() const {
    TransformationScript s;
    for (const Edge& e : removed_edges) s.steps.emplace_back(RemoveEdge{e.from, e.to});
    for (const ConstraintId& id : removed_vertices) s.steps.emplace_back(RemoveVertex{id});
    for (const ModifyVertex& m : modified) s.steps.emplace_back(m);
    for (const ConstraintVertex& v : added_vertices) s.steps.emplace_back(AddVertex{v});
    for (const Edge& e : added_edges) s.steps.emplace_back(AddEdge{e.from, e.to});
    return s;
  }
};

}  // namespace detail

// Structural diff by id: the canonical script turning `source` into a space
// structurally equal to `dest`. Step families appear as RemoveEdge,
// RemoveVertex, ModifyVertex, AddVertex, AddEdge, each sorted. Edges hanging
// off removed vertices are left to the RemoveVertex cascade. When
// simultaneous content changes on adjacent vertices would make the plain
// script transiently subset-inconsistent, the surviving edges between
// doubly-modified vertices are removed up front and re-added at the end,
// keeping the script valid in strict mode.
inline TransformationScript diff(const ConceptualSpace& source, const ConceptualSpace& dest) {
  detail::DiffParts parts;
  std::set<ConstraintId> content_changed;
  for (const auto& [id, v] : source.vertices()) {
    auto it = dest.vertices().find(id);
    if (it == dest.vertices().end()) {
      parts.removed_vertices.push_back(id);
    } else if (v.label != it->second.label || v.content != it->second.content) {
      parts.modified.push_back(ModifyVertex{id, it->second.label, it->second.content});
      if (v.content != it->second.content) content_changed.insert(id);
    }
  }
  for (const auto& [id, v] : dest.vertices()) {
    if (!source.vertices().count(id)) parts.added_vertices.push_back(v);
  }
  for (const Edge& e : source.edges()) {
    if (dest.edges().count(e)) continue;
    if (dest.vertices().count(e.from) && dest.vertices().count(e.to))
      parts.removed_edges.push_back(e);
  }
  for (const Edge& e : dest.edges()) {
    if (!source.edges().count(e)) parts.added_edges.push_back(e);
  }
  TransformationScript plain = parts.script();
  try {
    apply_script(source, plain);
    return plain;
  } catch (const ScriptError&) {
    // Bracket every surviving edge whose two endpoints both change content.
    std::set<Edge> bracket;
    for (const Edge& e : source.edges()) {
      if (dest.edges().count(e) && content_changed.count(e.from) && content_changed.count(e.to))
        bracket.insert(e);
    }
    std::set<Edge> removed(parts.removed_edges.begin(), parts.removed_edges.end());
    std::set<Edge> added(parts.added_edges.begin(), parts.added_edges.end());
    removed.insert(bracket.begin(), bracket.end());
    added.insert(bracket.begin(), bracket.end());
    parts.removed_edges.assign(removed.begin(), removed.end());
    parts.added_edges.assign(added.begin(), added.end());
    TransformationScript bracketed = parts.script();
    apply_script(source, bracketed);  // must hold; a failure here is a defect
    return bracketed;
  }
}

// Minimal repair making `artifact` valid for the space: add each missing
// support vertex (content from the hint, widened to admit the witness), and
// widen each existing support vertex whose content lacks the witness. One
// step per offending vertex is also the least any repair can do. Falls back
// to a lenient script when adjacent widenings cannot be ordered strictly.
inline TransformationScript revise_to_include(
    const ConceptualSpace& space, const Artifact& artifact,
    const std::map<ConstraintId, std::set<std::string>>& contents_hint = {},
    const std::set<std::string>& headers = default_headers()) {
  if (!headers.count(artifact.header))
    throw Error(ErrorCode::UnknownHeader, "'" + artifact.header + "'");
  if (artifact.support.empty())
    throw Error(ErrorCode::EmptySupport, "artifact support is empty");
  std::vector<ModifyVertex> widened;
  std::set<ConstraintId> widened_ids;
  std::vector<ConstraintVertex> added;
  for (const ConstraintId& id : artifact.support) {
    if (!space.contains(id)) continue;
    const ConstraintVertex& v = space.vertex(id);
    if (v.content && !v.content->count(artifact.witness)) {
      std::set<std::string> wider = *v.content;
      wider.insert(artifact.witness);
      widened.push_back(ModifyVertex{id, v.label, std::move(wider)});
      widened_ids.insert(id);
    }
  }
  for (const ConstraintId& id : artifact.support) {
    if (space.contains(id)) continue;
    std::optional<std::set<std::string>> content;
    if (auto it = contents_hint.find(id); it != contents_hint.end()) {
      content = it->second;
      content->insert(artifact.witness);
    }
    added.push_back(ConstraintVertex{id, id.str(), std::move(content), {}});
  }
  // A widened vertex must stay a subset of everything it depends on.
  for (const ConstraintId& id : widened_ids) {
    for (const Edge& e : space.edges()) {
      if (e.from != id) continue;
      const auto& parent = space.vertex(e.to).content;
      if (parent && !parent->count(artifact.witness) && !widened_ids.count(e.to))
        throw Error(ErrorCode::UnresolvableSubsetConflict,
                    "widening " + id.str() + " breaks edge (" + id.str() + ", " + e.to.str() +
                        "): witness '" + artifact.witness + "' is not in the content of " +
                        e.to.str());
    }
  }
  TransformationScript script;
  for (const ModifyVertex& m : widened) script.steps.emplace_back(m);
  for (const ConstraintVertex& v : added) script.steps.emplace_back(AddVertex{v});
  if (script.steps.empty()) {
    validate_artifact(space, artifact, headers);  // nothing to repair: must already be valid
    return script;
  }
  try {
    apply_script(space, script);
  } catch (const ScriptError&) {
    script.mode = ScriptMode::lenient;
    apply_script(space, script);  // must hold; a failure here is a defect
  }
  return script;
}

}  // namespace conceptspace
