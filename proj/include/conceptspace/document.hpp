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
// The .csd document format: a strict JSON schema with a canonical
// serialization. Canonical text has a fixed key order, vertices sorted by
// id, edges by (from, to), artifacts sorted, 2-space indentation, raw UTF-8,
// no floats, and a trailing newline — so parse(write(d)) == d and
// write(parse(t)) == t for canonical t. Parse errors carry a location:
// SyntaxError reports line and column, SchemaError a JSON-pointer-like path.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conceptspace/artifact.hpp"
#include "conceptspace/error.hpp"
#include "conceptspace/space.hpp"
#include "conceptspace/transform.hpp"

namespace conceptspace {

struct SpaceDocument {
  int format_version = 1;
  ConceptualSpace space;
  std::vector<Artifact> artifacts;  // kept canonically sorted
  std::map<std::string, TransformationScript> scripts;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void schema_fail(const std::string& path, const std::string& message) {
  throw Error(ErrorCode::SchemaError, (path.empty() ? "/" : path) + ": " + message);
}

inline void expect_keys(const Json& obj, const std::string& path,
                        std::initializer_list<const char*> allowed,
                        std::initializer_list<const char*> required) {
  for (const auto& item : obj.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* k) { return item.key() == k; }))
      schema_fail(path + "/" + item.key(), "unexpected key");
  }
  for (const char* k : required) {
    if (!obj.contains(k)) schema_fail(path, std::string("missing key '") + k + "'");
  }
}

inline const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_fail(path, "expected an object");
  return j;
}

inline const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array");
  return j;
}

inline std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

inline ConstraintId parse_id(const Json& j, const std::string& path) {
  std::string raw = expect_string(j, path);
  try {
    return ConstraintId(std::move(raw));
  } catch (const Error& e) {
    schema_fail(path, "invalid id (" + e.detail() + ")");
  }
}

inline std::set<std::string> parse_content(const Json& j, const std::string& path) {
  expect_array(j, path);
  std::set<std::string> content;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = path + "/" + std::to_string(i);
    if (!content.insert(expect_string(j[i], item_path)).second)
      schema_fail(item_path, "duplicate content string");
  }
  return content;
}

inline ConstraintVertex parse_vertex(const Json& j, const std::string& path) {
  expect_object(j, path);
  expect_keys(j, path, {"id", "label", "content", "meta"}, {"id", "label"});
  ConstraintVertex v{parse_id(j.at("id"), path + "/id"),
                     expect_string(j.at("label"), path + "/label"), std::nullopt, {}};
  if (j.contains("content")) v.content = parse_content(j.at("content"), path + "/content");
  if (j.contains("meta")) {
    const Json& meta = expect_object(j.at("meta"), path + "/meta");
    for (const auto& item : meta.items())
      v.meta.emplace(item.key(), expect_string(item.value(), path + "/meta/" + item.key()));
  }
  return v;
}

inline Transformation parse_step(const Json& j, const std::string& path) {
  expect_object(j, path);
  if (!j.contains("op")) schema_fail(path, "missing key 'op'");
  const std::string op = expect_string(j.at("op"), path + "/op");
  if (op == "add-vertex") {
    expect_keys(j, path, {"op", "vertex"}, {"op", "vertex"});
    return AddVertex{parse_vertex(j.at("vertex"), path + "/vertex")};
  }
  if (op == "remove-vertex") {
    expect_keys(j, path, {"op", "id"}, {"op", "id"});
    return RemoveVertex{parse_id(j.at("id"), path + "/id")};
  }
  if (op == "modify-vertex") {
    expect_keys(j, path, {"op", "id", "label", "content"}, {"op", "id", "label"});
    ModifyVertex m{parse_id(j.at("id"), path + "/id"),
                   expect_string(j.at("label"), path + "/label"), std::nullopt};
    if (j.contains("content")) m.new_content = parse_content(j.at("content"), path + "/content");
    return m;
  }
  if (op == "add-edge" || op == "remove-edge") {
    expect_keys(j, path, {"op", "from", "to"}, {"op", "from", "to"});
    ConstraintId from = parse_id(j.at("from"), path + "/from");
    ConstraintId to = parse_id(j.at("to"), path + "/to");
    if (op == "add-edge") return AddEdge{std::move(from), std::move(to)};
    return RemoveEdge{std::move(from), std::move(to)};
  }
  schema_fail(path + "/op", "unknown op '" + op + "'");
}

inline TransformationScript parse_script_json(const Json& j, const std::string& path) {
  expect_object(j, path);
  expect_keys(j, path, {"mode", "steps"}, {"mode", "steps"});
  TransformationScript script;
  const std::string mode = expect_string(j.at("mode"), path + "/mode");
  if (mode == "strict")
    script.mode = ScriptMode::strict;
  else if (mode == "lenient")
    script.mode = ScriptMode::lenient;
  else
    schema_fail(path + "/mode", "expected \"strict\" or \"lenient\"");
  const Json& steps = expect_array(j.at("steps"), path + "/steps");
  for (std::size_t i = 0; i < steps.size(); ++i)
    script.steps.push_back(parse_step(steps[i], path + "/steps/" + std::to_string(i)));
  return script;
}

inline Json vertex_to_json(const ConstraintVertex& v) {
  Json j;
  j["id"] = v.id.str();
  j["label"] = v.label;
  if (v.content) j["content"] = *v.content;
  if (!v.meta.empty()) j["meta"] = v.meta;
  return j;
}

inline Json artifact_to_json(const Artifact& a) {
  Json j;
  j["header"] = a.header;
  Json support = Json::array();
  for (const ConstraintId& id : a.support) support.push_back(id.str());
  j["support"] = std::move(support);
  j["witness"] = a.witness;
  return j;
}

inline Json step_to_json(const Transformation& t) {
  Json j;
  if (const auto* op = std::get_if<AddVertex>(&t)) {
    j["op"] = "add-vertex";
    j["vertex"] = vertex_to_json(op->vertex);
  } else if (const auto* op = std::get_if<RemoveVertex>(&t)) {
    j["op"] = "remove-vertex";
    j["id"] = op->id.str();
  } else if (const auto* op = std::get_if<ModifyVertex>(&t)) {
    j["op"] = "modify-vertex";
    j["id"] = op->id.str();
    j["label"] = op->new_label;
    if (op->new_content) j["content"] = *op->new_content;
  } else if (const auto* op = std::get_if<AddEdge>(&t)) {
    j["op"] = "add-edge";
    j["from"] = op->from.str();
    j["to"] = op->to.str();
  } else {
    const auto& rm = std::get<RemoveEdge>(t);
    j["op"] = "remove-edge";
    j["from"] = rm.from.str();
    j["to"] = rm.to.str();
  }
  return j;
}

inline Json script_to_json(const TransformationScript& script) {
  Json j;
  j["mode"] = script.mode == ScriptMode::strict ? "strict" : "lenient";
  Json steps = Json::array();
  for (const Transformation& t : script.steps) steps.push_back(step_to_json(t));
  j["steps"] = std::move(steps);
  return j;
}

inline std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

inline std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  const std::size_t limit = std::min(byte > 0 ? byte - 1 : std::size_t{0}, text.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte);
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(col));
  }
}

}  // namespace detail

// Parses and fully validates a document: schema first (with paths), then the
// space itself (build_space), then every artifact against the built space.
// Scripts are validated structurally only; whether they replay is a property
// of the space they are applied to.
inline SpaceDocument parse_document(const std::string& text) {
  using detail::Json;
  const Json root = detail::parse_json_text(text);
  detail::expect_object(root, "/");
  detail::expect_keys(root, "", {"format_version", "space", "artifacts", "scripts"},
                      {"format_version", "space"});
  const Json& version = root.at("format_version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != 1)
    detail::schema_fail("/format_version", "expected the integer 1");

  const Json& jspace = detail::expect_object(root.at("space"), "/space");
  detail::expect_keys(jspace, "/space", {"name", "vertices", "edges"},
                      {"name", "vertices", "edges"});
  const std::string name = detail::expect_string(jspace.at("name"), "/space/name");
  std::vector<ConstraintVertex> vertices;
  std::set<ConstraintId> known;
  const Json& jvertices = detail::expect_array(jspace.at("vertices"), "/space/vertices");
  for (std::size_t i = 0; i < jvertices.size(); ++i) {
    vertices.push_back(
        detail::parse_vertex(jvertices[i], "/space/vertices/" + std::to_string(i)));
    known.insert(vertices.back().id);
  }
  std::vector<Edge> edges;
  const Json& jedges = detail::expect_array(jspace.at("edges"), "/space/edges");
  for (std::size_t i = 0; i < jedges.size(); ++i) {
    const std::string path = "/space/edges/" + std::to_string(i);
    detail::expect_object(jedges[i], path);
    detail::expect_keys(jedges[i], path, {"from", "to"}, {"from", "to"});
    Edge e{detail::parse_id(jedges[i].at("from"), path + "/from"),
           detail::parse_id(jedges[i].at("to"), path + "/to")};
    if (!known.count(e.from)) detail::schema_fail(path + "/from", "unknown vertex '" + e.from.str() + "'");
    if (!known.count(e.to)) detail::schema_fail(path + "/to", "unknown vertex '" + e.to.str() + "'");
    edges.push_back(std::move(e));
  }

  SpaceDocument doc;
  doc.space = build_space(name, std::move(vertices), std::move(edges));

  if (root.contains("artifacts")) {
    const Json& jartifacts = detail::expect_array(root.at("artifacts"), "/artifacts");
    for (std::size_t i = 0; i < jartifacts.size(); ++i) {
      const std::string path = "/artifacts/" + std::to_string(i);
      detail::expect_object(jartifacts[i], path);
      detail::expect_keys(jartifacts[i], path, {"header", "support", "witness"},
                          {"header", "support", "witness"});
      Artifact a;
      a.header = detail::expect_string(jartifacts[i].at("header"), path + "/header");
      const Json& jsupport = detail::expect_array(jartifacts[i].at("support"), path + "/support");
      for (std::size_t k = 0; k < jsupport.size(); ++k) {
        const std::string id_path = path + "/support/" + std::to_string(k);
        ConstraintId id = detail::parse_id(jsupport[k], id_path);
        if (!known.count(id)) detail::schema_fail(id_path, "unknown vertex '" + id.str() + "'");
        if (!a.support.insert(std::move(id)).second)
          detail::schema_fail(id_path, "duplicate support id");
      }
      a.witness = detail::expect_string(jartifacts[i].at("witness"), path + "/witness");
      try {
        validate_artifact(doc.space, a);
      } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.detail());
      }
      doc.artifacts.push_back(std::move(a));
    }
    std::sort(doc.artifacts.begin(), doc.artifacts.end());
  }

  if (root.contains("scripts")) {
    const Json& jscripts = detail::expect_object(root.at("scripts"), "/scripts");
    for (const auto& item : jscripts.items()) {
      if (item.key().empty()) detail::schema_fail("/scripts", "empty script name");
      doc.scripts.emplace(item.key(),
                          detail::parse_script_json(item.value(), "/scripts/" + item.key()));
    }
  }
  return doc;
}

inline std::string write_document(const SpaceDocument& doc) {
  using detail::Json;
  Json root;
  root["format_version"] = doc.format_version;
  Json jspace;
  jspace["name"] = doc.space.name();
  Json jvertices = Json::array();
  for (const auto& [id, v] : doc.space.vertices()) jvertices.push_back(detail::vertex_to_json(v));
  jspace["vertices"] = std::move(jvertices);
  Json jedges = Json::array();
  for (const Edge& e : doc.space.edges()) {
    Json je;
    je["from"] = e.from.str();
    je["to"] = e.to.str();
    jedges.push_back(std::move(je));
  }
  jspace["edges"] = std::move(jedges);
  root["space"] = std::move(jspace);
  std::vector<Artifact> artifacts = doc.artifacts;
  std::sort(artifacts.begin(), artifacts.end());
  Json jartifacts = Json::array();
  for (const Artifact& a : artifacts) jartifacts.push_back(detail::artifact_to_json(a));
  root["artifacts"] = std::move(jartifacts);
  Json jscripts = Json::object();
  for (const auto& [sname, script] : doc.scripts)
    jscripts[sname] = detail::script_to_json(script);
  root["scripts"] = std::move(jscripts);
  return detail::dump_canonical(root);
}

// A transformation script as a standalone canonical text (the same object
// shape scripts have inside a document).
inline TransformationScript parse_script(const std::string& text) {
  return detail::parse_script_json(detail::parse_json_text(text), "");
}

inline std::string write_script(const TransformationScript& script) {
  return detail::dump_canonical(detail::script_to_json(script));
}

}  // namespace conceptspace
