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
// Core model: a conceptual space is a finite DAG of constraint vertices.
// Edges point from a dependent constraint to what it depends on, so the
// sinks of the graph are the axioms. Spaces are immutable values; every
// edit produces a new space (see transform.hpp).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conceptspace/error.hpp"

namespace conceptspace {

// Identifier of a constraint vertex. Permitted characters: letters, digits,
// '_', '-' and '\'' (primes mark transformed counterparts, e.g. A1').
// The id is stable across content modifications: a vertex keeps its id when
// its label or content is rewritten.
class ConstraintId {
 public:
  explicit ConstraintId(std::string value) : value_(std::move(value)) {
    if (value_.empty()) throw Error(ErrorCode::InvalidId, "empty id");
    for (char c : value_) {
      if (!is_id_char(c)) {
        throw Error(ErrorCode::InvalidId, "'" + value_ + "'");
      }
    }
  }

  const std::string& str() const noexcept { return value_; }

  friend auto operator<=>(const ConstraintId&, const ConstraintId&) = default;

 private:
  static bool is_id_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '\'';
  }

  std::string value_;
};

// One constraint. `content` is an optional finite sample of the strings the
// constraint admits; when absent the vertex is purely structural and all
// membership checks against it are vacuous. `meta` carries free-form
// annotations with no semantics.
struct ConstraintVertex {
  ConstraintId id;
  std::string label;
  std::optional<std::set<std::string>> content;
  std::map<std::string, std::string> meta;

  friend bool operator==(const ConstraintVertex&, const ConstraintVertex&) = default;
};

// Directed dependency: `from` is a further constraint on `to`, i.e. `from`
// cannot be invoked without assuming `to`.
struct Edge {
  ConstraintId from;
  ConstraintId to;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class ConceptualSpace;

namespace detail {

enum class Checks { full, skip_subset };

ConceptualSpace make_space(std::string name,
                           std::map<ConstraintId, ConstraintVertex> vertices,
                           std::set<Edge> edges, Checks checks);

}  // namespace detail

// A validated conceptual space. Construct through build_space; iteration
// order over vertices and edges is canonical (sorted by id, then by
// (from, to)), so everything derived from it is deterministic.
class ConceptualSpace {
 public:
  using VertexMap = std::map<ConstraintId, ConstraintVertex>;
  using EdgeSet = std::set<Edge>;

  ConceptualSpace() = default;  // the empty space is valid

  const std::string& name() const noexcept { return name_; }
  const VertexMap& vertices() const noexcept { return vertices_; }
  const EdgeSet& edges() const noexcept { return edges_; }

  bool empty() const noexcept { return vertices_.empty(); }

  bool contains(const ConstraintId& id) const { return vertices_.count(id) != 0; }

  const ConstraintVertex& vertex(const ConstraintId& id) const {
    auto it = vertices_.find(id);
    if (it == vertices_.end()) throw Error(ErrorCode::UnknownVertex, id.str());
    return it->second;
  }

  bool has_edge(const ConstraintId& from, const ConstraintId& to) const {
    return edges_.count(Edge{from, to}) != 0;
  }

  friend bool operator==(const ConceptualSpace&, const ConceptualSpace&) = default;

 private:
  ConceptualSpace(std::string name, VertexMap vertices, EdgeSet edges)
      : name_(std::move(name)), vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  friend ConceptualSpace detail::make_space(std::string, VertexMap, EdgeSet, detail::Checks);

  std::string name_;
  VertexMap vertices_;
  EdgeSet edges_;
};

namespace detail {

using AdjacencyMap = std::map<ConstraintId, std::vector<ConstraintId>>;

inline AdjacencyMap out_adjacency(const std::set<Edge>& edges) {
  AdjacencyMap adj;
  for (const Edge& e : edges) adj[e.from].push_back(e.to);  // sorted: set order
  return adj;
}

inline AdjacencyMap in_adjacency(const std::set<Edge>& edges) {
  AdjacencyMap adj;
  for (const Edge& e : edges) adj[e.to].push_back(e.from);
  return adj;
}

// All vertices reachable from `start` along the adjacency (path length >= 1).
inline std::set<ConstraintId> reachable_from(const AdjacencyMap& adj,
                                             const ConstraintId& start) {
  std::set<ConstraintId> seen;
  std::vector<ConstraintId> stack;
  if (auto it = adj.find(start); it != adj.end())
    stack.assign(it->second.begin(), it->second.end());
  while (!stack.empty()) {
    ConstraintId v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    if (auto it = adj.find(v); it != adj.end())
      for (const ConstraintId& n : it->second) stack.push_back(n);
  }
  return seen;
}

// Returns an empty vector when acyclic, otherwise one offending cycle as the
// id sequence v0 -> v1 -> ... -> v0 (first and last entries equal).
inline std::vector<ConstraintId> find_cycle(
    const std::map<ConstraintId, ConstraintVertex>& vertices, const std::set<Edge>& edges) {
  const AdjacencyMap adj = out_adjacency(edges);
  static const std::vector<ConstraintId> kNone;
  std::map<ConstraintId, int> color;  // absent: white, 1: on path, 2: done
  for (const auto& [root, unused] : vertices) {
    if (color.count(root)) continue;
    std::vector<std::pair<ConstraintId, std::size_t>> stack{{root, 0}};
    std::vector<ConstraintId> path{root};
    color[root] = 1;
    while (!stack.empty()) {
      auto& top = stack.back();
      auto it = adj.find(top.first);
      const std::vector<ConstraintId>& next = it == adj.end() ? kNone : it->second;
      if (top.second < next.size()) {
        const ConstraintId n = next[top.second++];
        auto cit = color.find(n);
        int c = cit == color.end() ? 0 : cit->second;
        if (c == 1) {
          auto pos = std::find(path.begin(), path.end(), n);
          std::vector<ConstraintId> cycle(pos, path.end());
          cycle.push_back(n);
          return cycle;
        }
        if (c == 0) {
          color[n] = 1;
          stack.emplace_back(n, 0);
          path.push_back(n);
        }
      } else {
        color[top.first] = 2;
        stack.pop_back();
        path.pop_back();
      }
    }
  }
  return {};
}

inline std::string join_path(const std::vector<ConstraintId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += " -> ";
    out += ids[i].str();
  }
  return out;
}

inline ConceptualSpace make_space(std::string name,
                                  std::map<ConstraintId, ConstraintVertex> vertices,
                                  std::set<Edge> edges, Checks checks) {
  for (const auto& [id, v] : vertices) {
    if (v.label.empty())
      throw Error(ErrorCode::InvalidLabel, "vertex " + id.str() + " has an empty label");
  }
  for (const Edge& e : edges) {
    if (!vertices.count(e.from))
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge (" + e.from.str() + ", " + e.to.str() + "): unknown vertex " + e.from.str());
    if (!vertices.count(e.to))
      throw Error(ErrorCode::UnknownEndpoint,
                  "edge (" + e.from.str() + ", " + e.to.str() + "): unknown vertex " + e.to.str());
  }
  if (auto cycle = find_cycle(vertices, edges); !cycle.empty())
    throw Error(ErrorCode::CycleDetected, join_path(cycle));
  if (checks == Checks::full) {
    for (const Edge& e : edges) {
      const auto& uc = vertices.at(e.from).content;
      const auto& vc = vertices.at(e.to).content;
      if (uc && vc &&
          !std::includes(vc->begin(), vc->end(), uc->begin(), uc->end()))
        throw Error(ErrorCode::SubsetViolation,
                    "edge (" + e.from.str() + ", " + e.to.str() + "): content of " +
                        e.from.str() + " is not a subset of content of " + e.to.str());
    }
  }
  return ConceptualSpace(std::move(name), std::move(vertices), std::move(edges));
}

}  // namespace detail

// Validates and assembles a space. Checks, in order: nonempty labels, unique
// vertex ids, edge endpoints, duplicate edges, acyclicity, subset-consistency
// (for every edge (u, v) with both contents present, u.content must be a
// subset of v.content).
inline ConceptualSpace build_space(std::string name, std::vector<ConstraintVertex> vertices,
                                   std::vector<Edge> edges) {
  ConceptualSpace::VertexMap vmap;
  for (ConstraintVertex& v : vertices) {
    if (vmap.count(v.id)) throw Error(ErrorCode::DuplicateVertexId, v.id.str());
    ConstraintId id = v.id;
    vmap.emplace(std::move(id), std::move(v));
  }
  ConceptualSpace::EdgeSet eset;
  for (Edge& e : edges) {
    if (!eset.insert(e).second)
      throw Error(ErrorCode::DuplicateEdge, "(" + e.from.str() + ", " + e.to.str() + ")");
  }
  return detail::make_space(std::move(name), std::move(vmap), std::move(eset), detail::Checks::full);
}

// The axioms: vertices with no outgoing edges (the sinks).
inline std::set<ConstraintId> axioms(const ConceptualSpace& space) {
  std::set<ConstraintId> result;
  for (const auto& [id, unused] : space.vertices()) result.insert(id);
  for (const Edge& e : space.edges()) result.erase(e.from);
  return result;
}

// Everything `id` can reach: the constraints that must be assumed before it.
inline std::set<ConstraintId> prereq_of(const ConceptualSpace& space, const ConstraintId& id) {
  if (!space.contains(id)) throw Error(ErrorCode::UnknownVertex, id.str());
  return detail::reachable_from(detail::out_adjacency(space.edges()), id);
}

// Everything that can reach `id`: the constraints that cannot be invoked
// without it.
inline std::set<ConstraintId> depends_of(const ConceptualSpace& space, const ConstraintId& id) {
  if (!space.contains(id)) throw Error(ErrorCode::UnknownVertex, id.str());
  return detail::reachable_from(detail::in_adjacency(space.edges()), id);
}

// Both reachability directions for every vertex. Keys never belong to their
// own set (paths have length >= 1) and u in depends[v] iff v in prereq[u].
struct ReachSets {
  std::map<ConstraintId, std::set<ConstraintId>> prereq;
  std::map<ConstraintId, std::set<ConstraintId>> depends;

  friend bool operator==(const ReachSets&, const ReachSets&) = default;
};

inline ReachSets reach_sets(const ConceptualSpace& space) {
  ReachSets result;
  const detail::AdjacencyMap adj = detail::out_adjacency(space.edges());
  for (const auto& [id, unused] : space.vertices()) {
    result.prereq[id] = detail::reachable_from(adj, id);
    result.depends[id];
  }
  for (const auto& [v, reach] : result.prereq)
    for (const ConstraintId& u : reach) result.depends[u].insert(v);
  return result;
}

// Transformative potential of a vertex: |depends(v)|, the number of
// constraints a modification of v can restructure. The vertex itself is
// not counted.
inline std::size_t transformative_potential(const ConceptualSpace& space,
                                            const ConstraintId& id) {
  return depends_of(space, id).size();
}

struct MaxPotential {
  std::size_t value = 0;
  std::vector<ConstraintId> maximizers;  // canonical id order

  friend bool operator==(const MaxPotential&, const MaxPotential&) = default;
};

// The largest transformative potential in the space and every vertex
// attaining it.
inline MaxPotential max_potential(const ConceptualSpace& space) {
  if (space.empty()) throw Error(ErrorCode::EmptySpace, "max_potential of an empty space");
  const ReachSets rs = reach_sets(space);
  MaxPotential result;
  for (const auto& [id, deps] : rs.depends)
    result.value = std::max(result.value, deps.size());
  for (const auto& [id, deps] : rs.depends)
    if (deps.size() == result.value) result.maximizers.push_back(id);
  return result;
}

enum class TheoremVerdict { Holds, Vacuous };

struct TheoremReport {
  TheoremVerdict verdict = TheoremVerdict::Vacuous;
  std::size_t value = 0;
  std::vector<ConstraintId> maximizers;
};

// Checks the axiom-maximality property: whenever the space has at least one
// non-axiom vertex, every maximizer of transformative potential is an axiom.
// Vacuous when every vertex is an axiom. A failed check is impossible for a
// valid DAG, so it is reported as an internal defect, not a verdict.
inline TheoremReport check_theorem(const ConceptualSpace& space) {
  TheoremReport report;
  if (space.empty()) return report;
  const MaxPotential mp = max_potential(space);
  report.value = mp.value;
  report.maximizers = mp.maximizers;
  const std::set<ConstraintId> sinks = axioms(space);
  if (sinks.size() == space.vertices().size()) {
    report.verdict = TheoremVerdict::Vacuous;
    return report;
  }
  for (const ConstraintId& m : mp.maximizers) {
    if (!sinks.count(m))
      throw std::logic_error("axiom-maximality violated: non-axiom " + m.str() +
                             " attains the maximal potential " + std::to_string(mp.value) +
                             " in space '" + space.name() + "'");
  }
  report.verdict = TheoremVerdict::Holds;
  return report;
}

struct EdgeMonotonicity {
  std::size_t dependents_of_from = 0;
  std::size_t dependents_of_to = 0;
};

// For an existing edge (u, v): |depends(u)| and |depends(v)|. Every
// dependent of u also reaches v through u, and u itself reaches v, so
// dependents_of_to >= dependents_of_from + 1 always.
inline EdgeMonotonicity edge_monotonicity_witness(const ConceptualSpace& space, const Edge& edge) {
  if (!space.edges().count(edge))
    throw Error(ErrorCode::UnknownEdge, "(" + edge.from.str() + ", " + edge.to.str() + ")");
  EdgeMonotonicity w{depends_of(space, edge.from).size(), depends_of(space, edge.to).size()};
  if (w.dependents_of_to < w.dependents_of_from + 1)
    throw std::logic_error("edge monotonicity violated on (" + edge.from.str() + ", " +
                           edge.to.str() + ")");
  return w;
}

// Equality of the model content: ids, labels, contents and edges. Space
// names and vertex meta annotations are ignored.
inline bool structurally_equal(const ConceptualSpace& a, const ConceptualSpace& b) {
  if (a.edges() != b.edges()) return false;
  if (a.vertices().size() != b.vertices().size()) return false;
  auto ita = a.vertices().begin();
  auto itb = b.vertices().begin();
  for (; ita != a.vertices().end(); ++ita, ++itb) {
    if (ita->first != itb->first) return false;
    if (ita->second.label != itb->second.label) return false;
    if (ita->second.content != itb->second.content) return false;
  }
  return true;
}

}  // namespace conceptspace
