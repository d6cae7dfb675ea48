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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace conceptspace {

// Every failure mode surfaced by the library. The code name is the first
// token of Error::what(), so diagnostics stay grep-able.
enum class ErrorCode {
  // space construction and editing
  DuplicateVertexId,
  DuplicateEdge,
  UnknownEndpoint,
  UnknownVertex,
  UnknownEdge,
  CycleDetected,
  SubsetViolation,
  InvalidId,
  InvalidLabel,
  EmptySpace,
  // artifacts
  EmptySupport,
  UnknownHeader,
  WitnessNotInIntersection,
  MissingContent,
  DuplicateContent,
  EmptyArtifactList,
  EmptyIntersection,
  IntensionalSupport,
  // transformation scripts
  StepFailed,
  UnresolvableSubsetConflict,
  ImpactUnsupported,
  // documents and corpus
  SyntaxError,
  SchemaError,
  UnknownCorpusEntry,
  IoError,
  // generators
  InvalidParams,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::SubsetViolation: return "SubsetViolation";
    case ErrorCode::InvalidId: return "InvalidId";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::UnknownHeader: return "UnknownHeader";
    case ErrorCode::WitnessNotInIntersection: return "WitnessNotInIntersection";
    case ErrorCode::MissingContent: return "MissingContent";
    case ErrorCode::DuplicateContent: return "DuplicateContent";
    case ErrorCode::EmptyArtifactList: return "EmptyArtifactList";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::IntensionalSupport: return "IntensionalSupport";
    case ErrorCode::StepFailed: return "StepFailed";
    case ErrorCode::UnresolvableSubsetConflict: return "UnresolvableSubsetConflict";
    case ErrorCode::ImpactUnsupported: return "ImpactUnsupported";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownCorpusEntry: return "UnknownCorpusEntry";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidParams: return "InvalidParams";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(std::move(detail)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Raised by apply_script: remembers which step failed (1-based) and why.
// A step index of steps.size() + 1 marks the final whole-space validation
// of a lenient script.
class ScriptError : public Error {
 public:
  ScriptError(std::size_t step, ErrorCode underlying, const std::string& cause)
      : Error(ErrorCode::StepFailed, "step " + std::to_string(step) + ": " + cause),
        step_(step),
        underlying_(underlying) {}

  std::size_t step() const noexcept { return step_; }
  ErrorCode underlying() const noexcept { return underlying_; }

 private:
  std::size_t step_;
  ErrorCode underlying_;
};

}  // namespace conceptspace
