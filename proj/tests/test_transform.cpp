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

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::EmptySpace;  // unreachable
}

// The destination of the relabel-style shift: same ids as the geocentric
// space, plus the new source vertex.
ConceptualSpace heliocentric_shared_ids() {
  return build_space("heliocentric-shared",
                     {vtx("V1", "Planetary Predictions (Almagest)"),
                      vtx("V2", "Heliocentric Orbital Model"), vtx("A1", "Sun Central"),
                      vtx("A2", "Elliptical Orbits"), vtx("V3'", "Earth Rotation 24-h Day")},
                     {edge("V1", "V2"), edge("V2", "A1"), edge("V2", "A2"), edge("V3'", "V2")});
}

}  // namespace

TEST_CASE("modifying a vertex changes label and content but keeps id and meta") {
  ConstraintVertex annotated = vtx("A1", "Earth Stationary & Central");
  annotated.meta.emplace("note", "keep me");
  const ConceptualSpace s = build_space(
      "geo", {vtx("V1", "Planetary Predictions (Almagest)"), vtx("V2", "Epicycle-Deferent Model"),
              annotated, vtx("A2", "Uniform Circular Motion")},
      {edge("V1", "V2"), edge("V2", "A1"), edge("V2", "A2")});
  const ConceptualSpace t = apply(s, ModifyVertex{cid("A1"), "Sun Central", std::nullopt});
  CHECK(t.vertex(cid("A1")).label == "Sun Central");
  CHECK(t.vertex(cid("A1")).meta.at("note") == "keep me");
  CHECK(t.edges() == s.edges());
  CHECK(s.vertex(cid("A1")).label == "Earth Stationary & Central");  // input untouched
}

TEST_CASE("modify can set and clear content") {
  const ConceptualSpace s = build_space("m", {vtx("X", "x", {"a"})}, {});
  const ConceptualSpace with = apply(s, ModifyVertex{cid("X"), "x", {{"a", "b"}}});
  CHECK(*with.vertex(cid("X")).content == std::set<std::string>{"a", "b"});
  const ConceptualSpace without = apply(with, ModifyVertex{cid("X"), "x", std::nullopt});
  CHECK_FALSE(without.vertex(cid("X")).content.has_value());
}

TEST_CASE("adding an edge that closes a cycle is rejected atomically") {
  const ConceptualSpace s = tu::fig_geocentric();
  const ConceptualSpace before = s;
  CHECK(error_code_of([&] { apply(s, AddEdge{cid("A1"), cid("V1")}); }) ==
        ErrorCode::CycleDetected);
  CHECK(s == before);
}

TEST_CASE("adding a vertex to the empty space yields a single axiom") {
  const ConceptualSpace s = apply(ConceptualSpace(), AddVertex{vtx("X", "x")});
  CHECK(axioms(s) == ids({"X"}));
}

TEST_CASE("removing a vertex cascades its incident edges") {
  const ConceptualSpace s = apply(tu::fig_geocentric(), RemoveVertex{cid("V2")});
  CHECK(s.vertices().size() == 3);
  CHECK(s.edges().empty());
  CHECK(axioms(s) == ids({"A1", "A2", "V1"}));
}

TEST_CASE("single-edit validation errors") {
  const ConceptualSpace s = tu::fig_geocentric();
  CHECK(error_code_of([&] { apply(s, AddVertex{vtx("A1", "dup")}); }) ==
        ErrorCode::DuplicateVertexId);
  CHECK(error_code_of([&] { apply(s, RemoveVertex{cid("Q")}); }) == ErrorCode::UnknownVertex);
  CHECK(error_code_of([&] { apply(s, ModifyVertex{cid("Q"), "x", std::nullopt}); }) ==
        ErrorCode::UnknownVertex);
  CHECK(error_code_of([&] { apply(s, AddEdge{cid("V1"), cid("V2")}); }) ==
        ErrorCode::DuplicateEdge);
  CHECK(error_code_of([&] { apply(s, AddEdge{cid("Q"), cid("V1")}); }) ==
        ErrorCode::UnknownVertex);
  CHECK(error_code_of([&] { apply(s, RemoveEdge{cid("A1"), cid("V1")}); }) ==
        ErrorCode::UnknownEdge);
  const ConceptualSpace c = build_space(
      "c", {vtx("U", "u", {"a", "b"}), vtx("V", "v", {"a"})}, {});
  CHECK(error_code_of([&] { apply(c, AddEdge{cid("U"), cid("V")}); }) ==
        ErrorCode::SubsetViolation);
  CHECK(error_code_of([&] {
          apply(build_space("m", {vtx("U", "u", {"a"}), vtx("V", "v", {"a"})},
                            {edge("U", "V")}),
                ModifyVertex{cid("U"), "u", {{"a", "z"}}});
        }) == ErrorCode::SubsetViolation);
}

TEST_CASE("a relabel-style script produces the shifted space on shared ids") {
  const TransformationScript script{
      ScriptMode::strict,
      {ModifyVertex{cid("A1"), "Sun Central", std::nullopt},
       ModifyVertex{cid("A2"), "Elliptical Orbits", std::nullopt},
       ModifyVertex{cid("V2"), "Heliocentric Orbital Model", std::nullopt},
       AddVertex{vtx("V3'", "Earth Rotation 24-h Day")},
       AddEdge{cid("V3'"), cid("V2")}}};
  const ConceptualSpace result = apply_script(tu::fig_geocentric(), script);
  CHECK(structurally_equal(result, heliocentric_shared_ids()));
  CHECK(axioms(result) == ids({"A1", "A2"}));
  CHECK(max_potential(result).value == 3);
}

TEST_CASE("the empty script is the identity") {
  const ConceptualSpace s = tu::fig_geocentric();
  CHECK(apply_script(s, TransformationScript{}) == s);
}

TEST_CASE("script failures carry the 1-based step index and the underlying code") {
  const TransformationScript script{
      ScriptMode::strict,
      {AddVertex{vtx("N", "new")}, AddVertex{vtx("A1", "dup")}}};
  try {
    apply_script(tu::fig_geocentric(), script);
    FAIL("expected StepFailed");
  } catch (const ScriptError& e) {
    CHECK(e.code() == ErrorCode::StepFailed);
    CHECK(e.step() == 2);
    CHECK(e.underlying() == ErrorCode::DuplicateVertexId);
    CHECK(std::string(e.what()) == "StepFailed: step 2: DuplicateVertexId: A1");
  }
}

TEST_CASE("lenient mode defers subset checks to a final validation") {
  const ConceptualSpace s = build_space(
      "l", {vtx("U", "u", {"a"}), vtx("V", "v", {"a"})}, {edge("U", "V")});
  // Swap both contents to {"b"}: transiently inconsistent, consistent at end.
  const std::vector<Transformation> steps{ModifyVertex{cid("U"), "u", {{"b"}}},
                                          ModifyVertex{cid("V"), "v", {{"b"}}}};
  CHECK(error_code_of([&] {
          apply_script(s, TransformationScript{ScriptMode::strict, steps});
        }) == ErrorCode::StepFailed);
  const ConceptualSpace done = apply_script(s, TransformationScript{ScriptMode::lenient, steps});
  CHECK(*done.vertex(cid("U")).content == std::set<std::string>{"b"});

  // A final-state violation is reported as the pseudo-step after the last.
  try {
    apply_script(s, TransformationScript{ScriptMode::lenient,
                                         {ModifyVertex{cid("U"), "u", {{"b"}}}}});
    FAIL("expected StepFailed");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 2);
    CHECK(e.underlying() == ErrorCode::SubsetViolation);
  }

  // Acyclicity is never deferred.
  try {
    apply_script(tu::fig_geocentric(),
                 TransformationScript{ScriptMode::lenient, {AddEdge{cid("A1"), cid("V1")}}});
    FAIL("expected StepFailed");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 1);
    CHECK(e.underlying() == ErrorCode::CycleDetected);
  }
}

TEST_CASE("impact reports dependents of the unedited space") {
  const ImpactReport geo = impact(tu::fig_geocentric(), cid("A1"));
  CHECK(geo.potential == 2);
  CHECK(geo.touched == ids({"A1", "V1", "V2"}));
  CHECK(geo.touched.size() == geo.potential + 1);
  CHECK(geo.axiom_changes == AxiomChanges{});
  const ImpactReport helio = impact(tu::fig_heliocentric(), cid("A1'"));
  CHECK(helio.potential == 3);
  CHECK(helio.touched == ids({"A1'", "V1'", "V2'", "V3'"}));
  const ImpactReport source = impact(tu::fig_geocentric(), cid("V1"));
  CHECK(source.potential == 0);
  CHECK(source.touched == ids({"V1"}));
  CHECK(geo.potential == transformative_potential(tu::fig_geocentric(), cid("A1")));
  CHECK(error_code_of([&] { impact(tu::fig_geocentric(), cid("Q")); }) ==
        ErrorCode::UnknownVertex);
  CHECK(error_code_of([&] { impact_of_edge(tu::fig_geocentric(), edge("V1", "V2")); }) ==
        ErrorCode::ImpactUnsupported);
}

TEST_CASE("removing a vertex's only outgoing edge promotes it to an axiom") {
  const ConceptualSpace before =
      build_space("p", {vtx("X", "x"), vtx("Y", "y")}, {edge("X", "Y")});
  const ConceptualSpace after = apply(before, RemoveEdge{cid("X"), cid("Y")});
  const AxiomChanges changes = axiom_changes(before, after);
  CHECK(changes.gained == ids({"X"}));
  CHECK(changes.lost.empty());
}

TEST_CASE("diff produces the canonical relabel script for shared-id shifts") {
  const ConceptualSpace geo = tu::fig_geocentric();
  const ConceptualSpace dest = heliocentric_shared_ids();
  const TransformationScript script = diff(geo, dest);
  REQUIRE(script.steps.size() == 5);
  CHECK(script.steps[0] ==
        Transformation{ModifyVertex{cid("A1"), "Sun Central", std::nullopt}});
  CHECK(script.steps[1] ==
        Transformation{ModifyVertex{cid("A2"), "Elliptical Orbits", std::nullopt}});
  CHECK(script.steps[2] ==
        Transformation{ModifyVertex{cid("V2"), "Heliocentric Orbital Model", std::nullopt}});
  CHECK(script.steps[3] == Transformation{AddVertex{vtx("V3'", "Earth Rotation 24-h Day")}});
  CHECK(script.steps[4] == Transformation{AddEdge{cid("V3'"), cid("V2")}});
  CHECK(structurally_equal(apply_script(geo, script), dest));
}

TEST_CASE("diff of a space with itself is empty") {
  const ConceptualSpace geo = tu::fig_geocentric();
  CHECK(diff(geo, geo).steps.empty());
}

TEST_CASE("diff to the empty space removes everything") {
  const ConceptualSpace one = build_space("one", {vtx("X", "x")}, {});
  const TransformationScript script = diff(one, ConceptualSpace());
  REQUIRE(script.steps.size() == 1);
  CHECK(script.steps[0] == Transformation{RemoveVertex{cid("X")}});
}

TEST_CASE("diff brackets edges between vertices whose contents move together") {
  const ConceptualSpace source = build_space(
      "b", {vtx("U", "u", {"a"}), vtx("V", "v", {"a"})}, {edge("U", "V")});
  const ConceptualSpace dest = build_space(
      "b", {vtx("U", "u", {"b"}), vtx("V", "v", {"b"})}, {edge("U", "V")});
  const TransformationScript script = diff(source, dest);
  CHECK(script.mode == ScriptMode::strict);
  const ConceptualSpace replayed = apply_script(source, script);  // strict: must not throw
  CHECK(structurally_equal(replayed, dest));
  REQUIRE(script.steps.size() == 4);
  CHECK(script.steps[0] == Transformation{RemoveEdge{cid("U"), cid("V")}});
  CHECK(script.steps[3] == Transformation{AddEdge{cid("U"), cid("V")}});
}

TEST_CASE("diff replays across disjoint id universes") {
  const ConceptualSpace geo = tu::fig_geocentric();
  const ConceptualSpace helio = tu::fig_heliocentric();
  const TransformationScript script = diff(geo, helio);
  CHECK(structurally_equal(apply_script(geo, script), helio));
  const TransformationScript back = diff(helio, geo);
  CHECK(structurally_equal(apply_script(helio, back), geo));
}

TEST_CASE("revise_to_include adds missing support vertices") {
  const ConceptualSpace s = build_space("r", {vtx("A", "a", {"w"})}, {});
  const Artifact a{"law", ids({"A", "N"}), "w"};
  const TransformationScript script = revise_to_include(s, a, {{cid("N"), {"w"}}});
  REQUIRE(script.steps.size() == 1);
  CHECK(std::holds_alternative<AddVertex>(script.steps[0]));
  const ConceptualSpace fixed = apply_script(s, script);
  CHECK_FALSE(validate_artifact(fixed, a).unverified);
}

TEST_CASE("revise_to_include without a hint adds an intensional vertex") {
  const ConceptualSpace s = build_space("r", {vtx("A", "a", {"w"})}, {});
  const Artifact a{"law", ids({"A", "N"}), "w"};
  const TransformationScript script = revise_to_include(s, a);
  const ConceptualSpace fixed = apply_script(s, script);
  CHECK(validate_artifact(fixed, a).unverified);  // N has no content to check
}

TEST_CASE("revise_to_include returns the empty script for a valid artifact") {
  const ConceptualSpace s = build_space("r", {vtx("A1", "a", {"p", "q"})}, {});
  const Artifact a{"law", ids({"A1"}), "q"};
  CHECK(revise_to_include(s, a).steps.empty());
}

TEST_CASE("revise_to_include widens an unconstrained vertex by the witness") {
  const ConceptualSpace s = build_space("r", {vtx("A1", "a", {"p", "q"})}, {});
  const Artifact a{"law", ids({"A1"}), "z"};
  const TransformationScript script = revise_to_include(s, a);
  REQUIRE(script.steps.size() == 1);
  CHECK(script.steps[0] ==
        Transformation{ModifyVertex{cid("A1"), "a", {{"p", "q", "z"}}}});
  const ConceptualSpace fixed = apply_script(s, script);
  CHECK_FALSE(validate_artifact(fixed, a).unverified);
}

TEST_CASE("revise_to_include refuses widening against an outgoing subset constraint") {
  // U depends on T; admitting "z" in U would break U ⊆ T and T is not part
  // of the artifact, so no single-step repair exists.
  const ConceptualSpace s = build_space(
      "r", {vtx("U", "u", {"a"}), vtx("T", "t", {"a", "b"})}, {edge("U", "T")});
  const Artifact a{"law", ids({"U"}), "z"};
  CHECK(error_code_of([&] { revise_to_include(s, a); }) ==
        ErrorCode::UnresolvableSubsetConflict);
}

TEST_CASE("revise_to_include widens adjacent support vertices together") {
  const ConceptualSpace s = build_space(
      "r", {vtx("U", "u", {"a"}), vtx("T", "t", {"a", "b"})}, {edge("U", "T")});
  const Artifact a{"law", ids({"U", "T"}), "z"};
  const TransformationScript script = revise_to_include(s, a);
  REQUIRE(script.steps.size() == 2);
  const ConceptualSpace fixed = apply_script(s, script);
  CHECK_FALSE(validate_artifact(fixed, a).unverified);
  CHECK(*fixed.vertex(cid("U")).content == std::set<std::string>{"a", "z"});
  CHECK(*fixed.vertex(cid("T")).content == std::set<std::string>{"a", "b", "z"});
}
