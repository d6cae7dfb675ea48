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
// Reference implementations used only by tests: brute-force reachability
// (independent of the traversal in space.hpp) and deterministic instance
// generators. Determinism contract: all randomness comes from std::mt19937_64
// (a fully specified, portable generator) consumed in a fixed draw order —
// one draw for the size, n-1 draws for the order shuffle, one draw per
// candidate pair — with values mapped by modulo.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conceptspace/error.hpp"
#include "conceptspace/space.hpp"

namespace conceptspace::oracle {

// Reachability by boolean matrix fixpoint: keep adding two-step paths until
// nothing changes. Quadratic-ish and proudly so; it exists to disagree with
// clever code.
inline ReachSets brute_reach(const ConceptualSpace& space) {
  std::vector<ConstraintId> ids;
  std::map<ConstraintId, std::size_t> index;
  for (const auto& [id, unused] : space.vertices()) {
    index.emplace(id, ids.size());
    ids.push_back(id);
  }
  const std::size_t n = ids.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const Edge& e : space.edges()) reach[index.at(e.from)][index.at(e.to)] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!reach[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[k][j] && !reach[i][j]) {
            reach[i][j] = true;
            changed = true;
          }
        }
      }
    }
  }
  ReachSets result;
  for (const ConstraintId& id : ids) {
    result.prereq[id];
    result.depends[id];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) {
        result.prereq[ids[i]].insert(ids[j]);
        result.depends[ids[j]].insert(ids[i]);
      }
    }
  }
  return result;
}

struct DagGenParams {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 1;
  std::uint64_t edge_prob_num = 0;  // edge probability as an exact rational
  std::uint64_t edge_prob_den = 1;
  std::uint64_t seed = 0;
  bool ensure_nonaxiom = false;  // guarantee at least one non-axiom vertex
};

namespace detail {

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;  // modulo mapping, part of the determinism contract
}

inline std::string padded_id(std::size_t index, std::size_t width) {
  std::string digits = std::to_string(index);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace detail

// Seed-deterministic random DAG: a uniformly shuffled vertex order, each
// forward pair kept as an edge with probability num/den. Edges run from
// earlier to later order positions, so the last position is always a sink.
inline ConceptualSpace random_dag(const DagGenParams& params) {
  if (params.min_vertices < 1)
    throw Error(ErrorCode::InvalidParams, "min_vertices must be at least 1");
  if (params.max_vertices < params.min_vertices)
    throw Error(ErrorCode::InvalidParams, "max_vertices below min_vertices");
  if (params.edge_prob_den == 0)
    throw Error(ErrorCode::InvalidParams, "edge probability denominator is zero");
  if (params.edge_prob_num > params.edge_prob_den)
    throw Error(ErrorCode::InvalidParams, "edge probability above 1");
  if (params.ensure_nonaxiom && params.min_vertices < 2)
    throw Error(ErrorCode::InvalidParams, "ensure_nonaxiom needs at least 2 vertices");
  std::mt19937_64 rng(params.seed);
  const std::size_t n =
      params.min_vertices +
      static_cast<std::size_t>(
          detail::draw_below(rng, params.max_vertices - params.min_vertices + 1));
  const std::size_t width = std::to_string(n).size();
  std::vector<ConstraintId> order;
  for (std::size_t i = 1; i <= n; ++i) order.emplace_back(detail::padded_id(i, width));
  for (std::size_t i = n; i-- > 1;) {
    const auto j = static_cast<std::size_t>(detail::draw_below(rng, i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (detail::draw_below(rng, params.edge_prob_den) < params.edge_prob_num)
        edges.push_back(Edge{order[i], order[j]});
    }
  }
  if (params.ensure_nonaxiom && edges.empty()) edges.push_back(Edge{order[0], order[1]});
  std::vector<ConstraintVertex> vertices;
  for (std::size_t i = 1; i <= n; ++i) {
    ConstraintId id(detail::padded_id(i, width));
    vertices.push_back(ConstraintVertex{id, id.str(), std::nullopt, {}});
  }
  return build_space("random-" + std::to_string(params.seed), std::move(vertices),
                     std::move(edges));
}

// Every labeled DAG on exactly `vertex_count` vertices whose edges respect
// the fixed order x1 < x2 < ...: one space per subset of the forward pairs.
inline std::vector<ConceptualSpace> exhaustive_small_spaces(std::size_t vertex_count) {
  if (vertex_count < 1 || vertex_count > 4)
    throw Error(ErrorCode::InvalidParams, "vertex_count must be between 1 and 4");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < vertex_count; ++i)
    for (std::size_t j = i + 1; j < vertex_count; ++j) pairs.emplace_back(i, j);
  std::vector<ConstraintId> ids;
  for (std::size_t i = 1; i <= vertex_count; ++i) ids.emplace_back("x" + std::to_string(i));
  std::vector<ConceptualSpace> spaces;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<ConstraintVertex> vertices;
    for (const ConstraintId& id : ids)
      vertices.push_back(ConstraintVertex{id, id.str(), std::nullopt, {}});
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (std::uint64_t{1} << k))
        edges.push_back(Edge{ids[pairs[k].first], ids[pairs[k].second]});
    }
    spaces.push_back(build_space("exhaustive-" + std::to_string(vertex_count) + "-" +
                                     std::to_string(mask),
                                 std::move(vertices), std::move(edges)));
  }
  return spaces;
}

}  // namespace conceptspace::oracle
