// Copyright 2026 The mrprio Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mrprio {

/// Every failure the library reports, by name. The CLI maps these onto its
/// exit codes: Usage -> 1, IoError and all data/validation codes -> 2.
enum class Errc {
  // data model
  InvalidId,
  DuplicateRecord,
  UnknownId,
  MissingCell,
  EmptyTestCaseList,
  InvalidCurve,
  // prioritization
  EmptyMatrix,
  MissingCriterion,
  // metrics
  MrSetMismatch,
  LengthMismatch,
  EmptyList,
  CurveTooShort,
  MissingCost,
  NoKillableFaults,
  ZeroBaseline,
  // stats
  EmptySample,
  // io
  MalformedHeader,
  BadCell,
  DuplicateId,
  RaggedRow,
  MissingField,
  DuplicateMr,
  NegativeCost,
  UnknownFaultId,
  EmptyConfig,
  IoError,
  // synth
  InvalidSpec,
  // cli
  Usage,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mrprio
