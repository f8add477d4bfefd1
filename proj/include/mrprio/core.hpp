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

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mrprio/error.hpp"

namespace mrprio {

/// Identifier labels are opaque strings. They must be non-empty, carry no
/// comma or newline, and no leading/trailing whitespace, so they can travel
/// through the CSV formats unquoted.
void validate_id_name(std::string_view name);

/// Label of one metamorphic relation (e.g. "MR1"). Unique within any one
/// matrix or profile.
class MrId {
 public:
  explicit MrId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const MrId&, const MrId&) = default;
  friend auto operator<=>(const MrId&, const MrId&) = default;

 private:
  std::string name_;
};

/// Label of one fault/mutant (e.g. "PIT_0042"). Same lexical rules as MrId.
class FaultId {
 public:
  explicit FaultId(std::string name);

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const FaultId&, const FaultId&) = default;
  friend auto operator<=>(const FaultId&, const FaultId&) = default;

 private:
  std::string name_;
};

/// Boolean MR x fault detection records from one test-execution campaign.
/// Row/column order is declaration order and is preserved everywhere.
/// Immutable after construction.
class KillMatrix {
 public:
  /// cells is row-major per MR: cells[mr * faults.size() + fault]. Throws
  /// DuplicateId on repeated ids and MissingCell on a dimension mismatch.
  KillMatrix(std::vector<MrId> mrs, std::vector<FaultId> faults, std::vector<std::uint8_t> cells);

  std::size_t mr_count() const noexcept { return mrs_.size(); }
  std::size_t fault_count() const noexcept { return faults_.size(); }

  const std::vector<MrId>& mrs() const noexcept { return mrs_; }
  const std::vector<FaultId>& faults() const noexcept { return faults_; }

  bool kills(std::size_t mr_index, std::size_t fault_index) const {
    return cells_[mr_index * faults_.size() + fault_index] != 0;
  }

  std::optional<std::size_t> mr_index(const MrId& id) const;
  std::optional<std::size_t> fault_index(const FaultId& id) const;

  /// Number of faults this MR kills.
  std::size_t row_kill_count(std::size_t mr_index) const;

  friend bool operator==(const KillMatrix&, const KillMatrix&);

 private:
  std::vector<MrId> mrs_;
  std::vector<FaultId> faults_;
  std::vector<std::uint8_t> cells_;
  std::map<std::string, std::size_t> mr_lookup_;
  std::map<std::string, std::size_t> fault_lookup_;
};

enum class Criterion { Statement, Branch };

const char* to_string(Criterion criterion) noexcept;

/// Per-MR sets of covered statement and branch identifiers. Unit identifiers
/// are opaque strings; both maps hold an entry (possibly empty) for every MR.
class CoverageProfile {
 public:
  using UnitSet = std::set<std::string>;

  CoverageProfile(std::vector<MrId> mrs, std::map<MrId, UnitSet> statements,
                  std::map<MrId, UnitSet> branches);

  const std::vector<MrId>& mrs() const noexcept { return mrs_; }
  const UnitSet& units(const MrId& id, Criterion criterion) const;
  const std::map<MrId, UnitSet>& statements() const noexcept { return statements_; }
  const std::map<MrId, UnitSet>& branches() const noexcept { return branches_; }

  friend bool operator==(const CoverageProfile&, const CoverageProfile&) = default;

 private:
  std::vector<MrId> mrs_;
  std::map<MrId, UnitSet> statements_;
  std::map<MrId, UnitSet> branches_;
};

/// Wall-clock cost, in seconds, of executing each MR's source and follow-up
/// test cases sequentially.
class CostProfile {
 public:
  explicit CostProfile(std::map<MrId, double> costs);

  const std::map<MrId, double>& costs() const noexcept { return costs_; }
  std::optional<double> cost_of(const MrId& id) const;

  friend bool operator==(const CostProfile&, const CostProfile&) = default;

 private:
  std::map<MrId, double> costs_;
};

enum class DatasetRole { Prioritizing, Validation };

/// Provenance labels for one dataset: which test suite produced the records
/// (e.g. "Ecoli") and which tool produced the faults (e.g. "Major"). The
/// tool never executes these suites; the labels exist to keep reports
/// traceable to their campaign.
struct DatasetMeta {
  std::string label;
  DatasetRole role = DatasetRole::Prioritizing;
  std::string test_suite_label;
  std::string fault_tool_label;

  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

DatasetMeta make_dataset_meta(std::string label, DatasetRole role, std::string test_suite_label = "",
                              std::string fault_tool_label = "");

enum class Method { FaultBased, StatementCoverage, BranchCoverage, Random, Optimal, External };

const char* to_string(Method method) noexcept;

/// A full permutation of MR identifiers plus provenance: how it was made,
/// with which seed, from which dataset.
struct MrOrdering {
  std::vector<MrId> order;
  Method method = Method::External;
  std::optional<std::uint64_t> seed;
  DatasetMeta source_dataset;

  /// True when order contains each MR of the universe exactly once.
  bool is_permutation_of(const std::vector<MrId>& universe) const;
};

/// Cumulative fault-detection percentages indexed by prefix size m = 1..M.
/// Values are non-decreasing and in [0, 100]; the final value equals the
/// union kill percentage of the whole MR set.
class DetectionCurve {
 public:
  explicit DetectionCurve(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// 1-based accessor: value of the first m MRs.
  double at_size(std::size_t m) const { return values_.at(m - 1); }
  double final_value() const { return values_.back(); }

  friend bool operator==(const DetectionCurve&, const DetectionCurve&) = default;

 private:
  std::vector<double> values_;
};

/// One (MR, fault, killed) observation used to assemble a KillMatrix.
struct KillRecord {
  MrId mr;
  FaultId fault;
  bool killed = false;
};

/// Assembles a KillMatrix from per-pair records. Every record must reference
/// declared ids and no pair may appear twice. Pairs without a record are an
/// error unless dense_default_false is set, in which case they default to
/// "not killed".
KillMatrix build_kill_matrix(std::vector<MrId> mrs, std::vector<FaultId> faults,
                             const std::vector<KillRecord>& records, bool dense_default_false = false);

/// Per-MR union of the unit sets covered by its individual test-case
/// executions (source and follow-up runs are separate entries in the list).
/// Fills only the chosen criterion of the resulting profile.
CoverageProfile union_coverage(const std::map<MrId, std::vector<CoverageProfile::UnitSet>>& per_test_case,
                               Criterion criterion);

/// Faults killed by at least one MR.
std::set<FaultId> killable_faults(const KillMatrix& km);

}  // namespace mrprio
