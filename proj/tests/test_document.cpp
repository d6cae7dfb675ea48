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

#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace conceptspace;
using tu::cid;
using tu::edge;
using tu::ids;
using tu::vtx;

namespace {

struct Failure {
  ErrorCode code;
  std::string detail;
};

Failure parse_failure(const std::string& text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return {e.code(), e.detail()};
  }
  FAIL("expected an Error");
  return {ErrorCode::EmptySpace, ""};  // unreachable
}

const std::string kMinimal =
    "{\n"
    "  \"format_version\": 1,\n"
    "  \"space\": {\n"
    "    \"name\": \"empty\",\n"
    "    \"vertices\": [],\n"
    "    \"edges\": []\n"
    "  },\n"
    "  \"artifacts\": [],\n"
    "  \"scripts\": {}\n"
    "}\n";

SpaceDocument sample_doc() {
  SpaceDocument doc;
  doc.space = build_space(
      "tiny", {vtx("X", "x", {"p", "q"}), vtx("Y", "y")}, {edge("X", "Y")});
  doc.artifacts.push_back(Artifact{"theory", ids({"X"}), "q"});
  doc.artifacts.push_back(Artifact{"law", ids({"X"}), "p"});
  doc.scripts.emplace(
      "grow", TransformationScript{
                  ScriptMode::lenient,
                  {AddVertex{vtx("Z", "z")}, RemoveVertex{cid("Y")},
                   ModifyVertex{cid("X"), "x2", {{"p"}}}, AddEdge{cid("X"), cid("Z")},
                   RemoveEdge{cid("X"), cid("Z")}}});
  return doc;
}

}  // namespace

TEST_CASE("the minimal document is canonical") {
  const SpaceDocument doc = parse_document(kMinimal);
  CHECK(doc.format_version == 1);
  CHECK(doc.space.name() == "empty");
  CHECK(doc.space.vertices().empty());
  CHECK(doc.artifacts.empty());
  CHECK(doc.scripts.empty());
  CHECK(write_document(doc) == kMinimal);
}

TEST_CASE("artifacts and scripts keys are optional on input, always written") {
  const SpaceDocument doc = parse_document(
      "{\"format_version\": 1, \"space\": {\"name\": \"empty\", \"vertices\": [], "
      "\"edges\": []}}");
  CHECK(write_document(doc) == kMinimal);
}

TEST_CASE("write then parse is the identity on document values") {
  const SpaceDocument doc = sample_doc();
  const std::string text = write_document(doc);
  const SpaceDocument back = parse_document(text);
  CHECK(back.space == doc.space);
  CHECK(back.scripts == doc.scripts);
  // Artifacts are kept canonically sorted, so compare against the sorted copy.
  std::vector<Artifact> sorted = doc.artifacts;
  std::sort(sorted.begin(), sorted.end());
  CHECK(back.artifacts == sorted);
  CHECK(back == parse_document(write_document(back)));
}

TEST_CASE("parse then write is idempotent byte for byte") {
  const std::string once = write_document(sample_doc());
  CHECK(write_document(parse_document(once)) == once);
}

TEST_CASE("artifacts are written in canonical order") {
  const std::string text = write_document(sample_doc());
  CHECK(text.find("\"law\"") < text.find("\"theory\""));
}

TEST_CASE("non-ASCII labels and content survive a roundtrip unescaped") {
  SpaceDocument doc;
  doc.space = build_space(
      "utf8", {vtx("R1'", "p = mv/√(1−v²/c²)", {"180°"})}, {});
  const std::string text = write_document(doc);
  CHECK(text.find("p = mv/√(1−v²/c²)") != std::string::npos);
  CHECK(text.find("\\u") == std::string::npos);
  CHECK(parse_document(text).space == doc.space);
  CHECK(write_document(parse_document(text)) == text);
}

TEST_CASE("vertex meta entries roundtrip") {
  ConstraintVertex v = vtx("X", "x");
  v.meta.emplace("note", "interpretive dependency encoding");
  SpaceDocument doc;
  doc.space = build_space("m", {v}, {});
  const SpaceDocument back = parse_document(write_document(doc));
  CHECK(back.space.vertex(cid("X")).meta.at("note") ==
        "interpretive dependency encoding");
}

TEST_CASE("malformed JSON reports line and column") {
  const Failure f = parse_failure("{\n  \"x\" }");
  CHECK(f.code == ErrorCode::SyntaxError);
  CHECK(f.detail.find("line 2, column ") == 0);
}

TEST_CASE("schema violations report a path") {
  const Failure missing = parse_failure("{\"format_version\": 1}");
  CHECK(missing.code == ErrorCode::SchemaError);
  CHECK(missing.detail == "/: missing key 'space'");

  const Failure extra = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": [], "
      "\"edges\": []}, \"extra\": 1}");
  CHECK(extra.detail == "/extra: unexpected key");

  const Failure version = parse_failure(
      "{\"format_version\": 2, \"space\": {\"name\": \"e\", \"vertices\": [], "
      "\"edges\": []}}");
  CHECK(version.detail == "/format_version: expected the integer 1");

  const Failure version_str = parse_failure(
      "{\"format_version\": \"1\", \"space\": {\"name\": \"e\", \"vertices\": [], "
      "\"edges\": []}}");
  CHECK(version_str.detail == "/format_version: expected the integer 1");

  const Failure not_array = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": [], "
      "\"edges\": []}, \"artifacts\": {}}");
  CHECK(not_array.detail == "/artifacts: expected an array");
}

TEST_CASE("edges must reference declared vertices") {
  const Failure f = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": "
      "[{\"id\": \"X\", \"label\": \"x\"}], \"edges\": [{\"from\": \"X\", \"to\": "
      "\"Z\"}]}}");
  CHECK(f.code == ErrorCode::SchemaError);
  CHECK(f.detail == "/space/edges/0/to: unknown vertex 'Z'");
}

TEST_CASE("content arrays may not repeat a string") {
  const Failure f = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": "
      "[{\"id\": \"X\", \"label\": \"x\", \"content\": [\"p\", \"p\"]}], "
      "\"edges\": []}}");
  CHECK(f.detail == "/space/vertices/0/content/1: duplicate content string");
}

TEST_CASE("ids are validated where they appear") {
  const Failure f = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": "
      "[{\"id\": \"bad id\", \"label\": \"x\"}], \"edges\": []}}");
  CHECK(f.code == ErrorCode::SchemaError);
  CHECK(f.detail == "/space/vertices/0/id: invalid id ('bad id')");
}

TEST_CASE("artifact support ids must be distinct and known") {
  const std::string prefix =
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": "
      "[{\"id\": \"X\", \"label\": \"x\"}], \"edges\": []}, \"artifacts\": ";
  const Failure dup =
      parse_failure(prefix +
                    "[{\"header\": \"law\", \"support\": [\"X\", \"X\"], "
                    "\"witness\": \"w\"}]}");
  CHECK(dup.detail == "/artifacts/0/support/1: duplicate support id");
  const Failure unknown =
      parse_failure(prefix +
                    "[{\"header\": \"law\", \"support\": [\"Q\"], "
                    "\"witness\": \"w\"}]}");
  CHECK(unknown.detail == "/artifacts/0/support/0: unknown vertex 'Q'");
}

TEST_CASE("artifact semantics are checked with the path prefixed") {
  const Failure f = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": "
      "[{\"id\": \"X\", \"label\": \"x\", \"content\": [\"p\"]}], \"edges\": []}, "
      "\"artifacts\": [{\"header\": \"law\", \"support\": [\"X\"], \"witness\": "
      "\"w\"}]}");
  CHECK(f.code == ErrorCode::WitnessNotInIntersection);
  CHECK(f.detail == "/artifacts/0: witness 'w' is not in the content of X");
}

TEST_CASE("script schema errors name the offending step") {
  const std::string prefix =
      "{\"format_version\": 1, \"space\": {\"name\": \"e\", \"vertices\": [], "
      "\"edges\": []}, \"scripts\": {\"s\": ";
  const Failure op = parse_failure(
      prefix + "{\"mode\": \"strict\", \"steps\": [{\"op\": \"noop\"}]}}}");
  CHECK(op.detail == "/scripts/s/steps/0/op: unknown op 'noop'");
  const Failure mode =
      parse_failure(prefix + "{\"mode\": \"loose\", \"steps\": []}}}");
  CHECK(mode.detail == "/scripts/s/mode: expected \"strict\" or \"lenient\"");
}

TEST_CASE("space-level failures surface with their own codes") {
  const Failure f = parse_failure(
      "{\"format_version\": 1, \"space\": {\"name\": \"cyclic\", \"vertices\": "
      "[{\"id\": \"X\", \"label\": \"x\"}, {\"id\": \"Y\", \"label\": \"y\"}], "
      "\"edges\": [{\"from\": \"X\", \"to\": \"Y\"}, {\"from\": \"Y\", \"to\": "
      "\"X\"}]}}");
  CHECK(f.code == ErrorCode::CycleDetected);
  CHECK(f.detail == "X -> Y -> X");
}

TEST_CASE("standalone scripts roundtrip through their canonical text") {
  const TransformationScript script = sample_doc().scripts.at("grow");
  const std::string text = write_script(script);
  CHECK(parse_script(text) == script);
  CHECK(write_script(parse_script(text)) == text);
  CHECK(text.find("\"mode\": \"lenient\"") != std::string::npos);
}

TEST_CASE("standalone script schema errors use a root-relative path") {
  try {
    parse_script("{\"steps\": []}");
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    CHECK(e.detail() == "/: missing key 'mode'");
  }
}
