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
// conceptspace: the command-line front end. Documents are addressed by file
// path, by `-` for standard input, or by `corpus:<name>` for bundled spaces.
// Exit codes: 0 success, 1 domain error, 2 usage error. All output is
// deterministic; randomized modes demand an explicit --seed.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conceptspace/conceptspace.hpp"

namespace {

namespace cs = conceptspace;
using Json = nlohmann::ordered_json;

std::string read_all(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cs::Error(cs::ErrorCode::IoError, "cannot read '" + path + "'");
  return read_all(in);
}

cs::SpaceDocument load_doc(const std::string& ref) {
  if (ref.rfind("corpus:", 0) == 0) return cs::load_corpus(ref.substr(7));
  if (ref == "-") return cs::parse_document(read_all(std::cin));
  return cs::parse_document(read_file(ref));
}

template <typename Range>
std::string bracket(const Range& ids) {
  std::string out = "[";
  bool first = true;
  for (const auto& id : ids) {
    if (!first) out += ",";
    out += id.str();
    first = false;
  }
  return out + "]";
}

template <typename Range>
Json id_array(const Range& ids) {
  Json arr = Json::array();
  for (const auto& id : ids) arr.push_back(id.str());
  return arr;
}

void print_json(const Json& j) { std::cout << cs::detail::dump_canonical(j); }

bool want_json(const std::string& output) { return output == "json"; }

const cs::Artifact& artifact_at(const cs::SpaceDocument& doc, std::size_t index) {
  if (index >= doc.artifacts.size())
    throw cs::Error(cs::ErrorCode::InvalidParams,
                    "artifact index " + std::to_string(index) + " out of range (document has " +
                        std::to_string(doc.artifacts.size()) + " artifacts)");
  return doc.artifacts[index];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph engine for scientific conceptual spaces", "conceptspace"};
  app.require_subcommand(1);
  int exit_code = 0;

  // validate
  {
    auto* sub = app.add_subcommand("validate", "parse and fully validate a document");
    auto ref = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref, "document path, -, or corpus:<name>")->required();
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, output] {
      const cs::SpaceDocument doc = load_doc(*ref);
      std::vector<std::size_t> unverified;
      for (std::size_t i = 0; i < doc.artifacts.size(); ++i) {
        if (cs::validate_artifact(doc.space, doc.artifacts[i]).unverified) unverified.push_back(i);
      }
      if (want_json(*output)) {
        Json j;
        j["ok"] = true;
        j["name"] = doc.space.name();
        j["vertices"] = doc.space.vertices().size();
        j["edges"] = doc.space.edges().size();
        j["artifacts"] = doc.artifacts.size();
        j["scripts"] = doc.scripts.size();
        j["unverified_artifacts"] = unverified;
        print_json(j);
        return;
      }
      std::cout << "OK " << doc.space.name() << ": vertices=" << doc.space.vertices().size()
                << " edges=" << doc.space.edges().size()
                << " artifacts=" << doc.artifacts.size() << " scripts=" << doc.scripts.size()
                << "\n";
      for (std::size_t i : unverified)
        std::cout << "warning: artifact " << i << " is unverified (intensional support)\n";
    });
  }

  // axioms
  {
    auto* sub = app.add_subcommand("axioms", "list the axiom (sink) vertices");
    auto ref = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, output] {
      const std::set<cs::ConstraintId> ids = cs::axioms(load_doc(*ref).space);
      if (want_json(*output)) {
        Json j;
        j["axioms"] = id_array(ids);
        print_json(j);
        return;
      }
      for (const cs::ConstraintId& id : ids) std::cout << id.str() << "\n";
    });
  }

  // potential / depends / prereq / impact (all take --vertex)
  struct VertexCmd {
    const char* name;
    const char* help;
  };
  for (const VertexCmd& cmd : {VertexCmd{"potential", "transformative potential of a vertex"},
                               VertexCmd{"depends", "vertices that depend on a vertex"},
                               VertexCmd{"prereq", "prerequisites of a vertex"},
                               VertexCmd{"impact", "impact report for modifying a vertex"}}) {
    auto* sub = app.add_subcommand(cmd.name, cmd.help);
    auto ref = std::make_shared<std::string>();
    auto vertex = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--vertex", *vertex, "constraint id")->required();
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    const std::string name = cmd.name;
    sub->callback([ref, vertex, output, name] {
      const cs::SpaceDocument doc = load_doc(*ref);
      const cs::ConstraintId id(*vertex);
      if (name == "potential") {
        const std::size_t value = cs::transformative_potential(doc.space, id);
        if (want_json(*output)) {
          Json j;
          j["vertex"] = id.str();
          j["potential"] = value;
          print_json(j);
        } else {
          std::cout << value << "\n";
        }
        return;
      }
      if (name == "depends" || name == "prereq") {
        const std::set<cs::ConstraintId> ids =
            name == "depends" ? cs::depends_of(doc.space, id) : cs::prereq_of(doc.space, id);
        if (want_json(*output)) {
          Json j;
          j["vertex"] = id.str();
          j[name] = id_array(ids);
          print_json(j);
        } else {
          for (const cs::ConstraintId& v : ids) std::cout << v.str() << "\n";
        }
        return;
      }
      const cs::ImpactReport report = cs::impact(doc.space, id);
      if (want_json(*output)) {
        Json j;
        j["target"] = report.target.str();
        j["potential"] = report.potential;
        j["touched"] = id_array(report.touched);
        j["axioms_gained"] = id_array(report.axiom_changes.gained);
        j["axioms_lost"] = id_array(report.axiom_changes.lost);
        print_json(j);
      } else {
        std::cout << "target=" << report.target.str() << " potential=" << report.potential
                  << " touched=" << bracket(report.touched)
                  << " axioms-gained=" << bracket(report.axiom_changes.gained)
                  << " axioms-lost=" << bracket(report.axiom_changes.lost) << "\n";
      }
    });
  }

  // apply
  {
    auto* sub = app.add_subcommand("apply", "apply a transformation script to a document's space");
    auto ref = std::make_shared<std::string>();
    auto script_ref = std::make_shared<std::string>();
    auto strict = std::make_shared<bool>(false);
    auto lenient = std::make_shared<bool>(false);
    sub->add_option("doc", *ref)->required();
    sub->add_option("--script", *script_ref, "script name in the document, or a script file path")
        ->required();
    auto* strict_flag = sub->add_flag("--strict", *strict, "force strict mode");
    sub->add_flag("--lenient", *lenient, "force lenient mode")->excludes(strict_flag);
    sub->callback([ref, script_ref, strict, lenient] {
      const cs::SpaceDocument doc = load_doc(*ref);
      cs::TransformationScript script;
      if (auto it = doc.scripts.find(*script_ref); it != doc.scripts.end())
        script = it->second;
      else
        script = cs::parse_script(read_file(*script_ref));
      if (*strict) script.mode = cs::ScriptMode::strict;
      if (*lenient) script.mode = cs::ScriptMode::lenient;
      cs::SpaceDocument out;
      out.space = cs::apply_script(doc.space, script);
      std::cout << cs::write_document(out);
    });
  }

  // diff
  {
    auto* sub = app.add_subcommand("diff", "canonical script turning one space into another");
    auto ref_a = std::make_shared<std::string>();
    auto ref_b = std::make_shared<std::string>();
    sub->add_option("source", *ref_a)->required();
    sub->add_option("dest", *ref_b)->required();
    sub->callback([ref_a, ref_b] {
      std::cout << cs::write_script(cs::diff(load_doc(*ref_a).space, load_doc(*ref_b).space));
    });
  }

  // similarity
  {
    auto* sub = app.add_subcommand("similarity", "Jaccard similarity of two artifact supports");
    auto ref = std::make_shared<std::string>();
    auto a = std::make_shared<std::size_t>(0);
    auto b = std::make_shared<std::size_t>(1);
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--a", *a, "first artifact index (default 0)");
    sub->add_option("--b", *b, "second artifact index (default 1)");
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, a, b, output] {
      const cs::SpaceDocument doc = load_doc(*ref);
      const cs::Rational r = cs::similarity(artifact_at(doc, *a), artifact_at(doc, *b));
      if (want_json(*output)) {
        Json j;
        j["numerator"] = r.num;
        j["denominator"] = r.den;
        j["decimal"] = r.decimal();
        print_json(j);
      } else {
        std::cout << r.str() << " (~" << r.decimal() << ")\n";
      }
    });
  }

  // locate
  {
    auto* sub = app.add_subcommand("locate", "support and prerequisite closure of an artifact");
    auto ref = std::make_shared<std::string>();
    auto index = std::make_shared<std::size_t>(0);
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--artifact", *index, "artifact index (default 0)");
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, index, output] {
      const cs::SpaceDocument doc = load_doc(*ref);
      const cs::Location loc = cs::locate(doc.space, artifact_at(doc, *index));
      if (want_json(*output)) {
        Json j;
        j["support"] = id_array(loc.support);
        j["closure"] = id_array(loc.closure);
        print_json(j);
      } else {
        std::cout << "support=" << bracket(loc.support) << " closure=" << bracket(loc.closure)
                  << "\n";
      }
    });
  }

  // induce
  {
    auto* sub = app.add_subcommand(
        "induce", "induce a space from a document's artifacts and vertex contents");
    auto ref = std::make_shared<std::string>();
    auto name = std::make_shared<std::string>("induced");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--name", *name, "name of the induced space");
    sub->callback([ref, name] {
      const cs::SpaceDocument doc = load_doc(*ref);
      std::map<cs::ConstraintId, std::set<std::string>> contents;
      for (const auto& [id, v] : doc.space.vertices()) {
        if (v.content) contents.emplace(id, *v.content);
      }
      cs::SpaceDocument out;
      out.space = cs::induce_space(*name, doc.artifacts, contents);
      out.artifacts = doc.artifacts;
      std::cout << cs::write_document(out);
    });
  }

  // generate
  {
    auto* sub = app.add_subcommand("generate", "generate the canonical artifact for a support");
    auto ref = std::make_shared<std::string>();
    auto header = std::make_shared<std::string>();
    auto support = std::make_shared<std::vector<std::string>>();
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref)->required();
    sub->add_option("--header", *header)->required();
    sub->add_option("--support", *support, "comma-separated constraint ids")
        ->required()
        ->delimiter(',');
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, header, support, output] {
      const cs::SpaceDocument doc = load_doc(*ref);
      std::set<cs::ConstraintId> ids;
      for (const std::string& s : *support) ids.insert(cs::ConstraintId(s));
      const cs::Artifact artifact = cs::generate_artifact(doc.space, *header, ids);
      if (want_json(*output)) {
        print_json(cs::detail::artifact_to_json(artifact));
      } else {
        std::cout << "header=" << artifact.header << " support=" << bracket(artifact.support)
                  << " witness=" << artifact.witness << "\n";
      }
    });
  }

  // export-dot
  {
    auto* sub = app.add_subcommand("export-dot", "export the space as DOT");
    auto ref = std::make_shared<std::string>();
    sub->add_option("doc", *ref)->required();
    sub->callback([ref] { std::cout << cs::export_dot(load_doc(*ref).space); });
  }

  // check-theorem
  {
    auto* sub = app.add_subcommand(
        "check-theorem", "check that every potential maximizer is an axiom");
    auto ref = std::make_shared<std::string>();
    auto require_nonvacuous = std::make_shared<bool>(false);
    auto trials = std::make_shared<std::uint64_t>(0);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto output = std::make_shared<std::string>("text");
    sub->add_option("doc", *ref, "document to check (omit in --trials mode)");
    sub->add_flag("--require-nonvacuous", *require_nonvacuous,
                  "fail when every vertex is an axiom");
    auto* trials_opt =
        sub->add_option("--trials", *trials, "check this many seeded random spaces instead");
    auto* seed_opt = sub->add_option("--seed", *seed, "base seed for --trials mode");
    trials_opt->needs(seed_opt);
    sub->add_option("--output", *output)->check(CLI::IsMember({"text", "json"}));
    sub->callback([ref, require_nonvacuous, trials, seed, output, &exit_code] {
      if (*trials > 0) {
        if (!ref->empty())
          throw CLI::ValidationError("check-theorem",
                                     "--trials mode does not take a document");
        for (std::uint64_t i = 0; i < *trials; ++i) {
          cs::oracle::DagGenParams params;
          params.min_vertices = 5;
          params.max_vertices = 50;
          const std::uint64_t nums[] = {1, 3, 7};
          params.edge_prob_num = nums[i % 3];
          params.edge_prob_den = 10;
          params.seed = *seed + i;
          params.ensure_nonaxiom = true;
          const cs::TheoremReport report = cs::check_theorem(cs::oracle::random_dag(params));
          if (report.verdict != cs::TheoremVerdict::Holds)
            throw std::logic_error("random space with a non-axiom vertex reported as vacuous");
        }
        if (want_json(*output)) {
          Json j;
          j["verdict"] = "HOLDS";
          j["trials"] = *trials;
          j["seed"] = *seed;
          print_json(j);
        } else {
          std::cout << "HOLDS trials=" << *trials << " seed=" << *seed << "\n";
        }
        return;
      }
      if (ref->empty())
        throw CLI::ValidationError("check-theorem", "a document or --trials is required");
      const cs::TheoremReport report = cs::check_theorem(load_doc(*ref).space);
      const bool holds = report.verdict == cs::TheoremVerdict::Holds;
      if (want_json(*output)) {
        Json j;
        j["verdict"] = holds ? "HOLDS" : "VACUOUS";
        j["maximizers"] = id_array(report.maximizers);
        j["value"] = report.value;
        print_json(j);
      } else {
        std::cout << (holds ? "HOLDS" : "VACUOUS") << " maximizers="
                  << bracket(report.maximizers) << " value=" << report.value << "\n";
      }
      if (!holds && *require_nonvacuous) exit_code = 1;
    });
  }

  // corpus
  {
    auto* sub = app.add_subcommand("corpus", "bundled historical spaces");
    sub->require_subcommand(1);
    auto* list = sub->add_subcommand("list", "list corpus entry names");
    list->callback([] {
      for (const std::string& name : cs::corpus_names()) std::cout << name << "\n";
    });
    auto* show = sub->add_subcommand("show", "print a corpus entry as a canonical document");
    auto name = std::make_shared<std::string>();
    show->add_option("name", *name)->required();
    show->callback([name] { std::cout << cs::write_document(cs::load_corpus(*name)); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const cs::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
