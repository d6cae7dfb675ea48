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
// DOT (graphviz) export. Byte-deterministic: nodes sorted by id, edges by
// (from, to), axioms drawn as bold boxes, everything else as ellipses.

#include <set>
#include <string>

#include "conceptspace/space.hpp"

namespace conceptspace {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::string export_dot(const ConceptualSpace& space) {
  const std::set<ConstraintId> sinks = axioms(space);
  std::string out = "digraph " + detail::dot_quote(space.name()) + " {\n";
  for (const auto& [id, v] : space.vertices()) {
    out += "  " + detail::dot_quote(id.str()) + " [label=" + detail::dot_quote(v.label);
    out += sinks.count(id) ? ", shape=box, style=bold];\n" : ", shape=ellipse];\n";
  }
  for (const Edge& e : space.edges()) {
    out += "  " + detail::dot_quote(e.from.str()) + " -> " + detail::dot_quote(e.to.str()) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace conceptspace
