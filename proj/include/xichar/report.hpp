// Copyright 2026 The xichar Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xichar/catalog.hpp"
#include "xichar/finite_group.hpp"

namespace xichar {

/// Which verifications a scan runs. Multiplicities and the basic identities
/// are always computed.
struct CheckSet {
  bool theorem_a = true;
  bool theorem_b = true;
  bool artin = true;
  bool zeros = true;

  /// Comma-separated list of theorem-a, theorem-b, artin, zeros, all.
  /// Throws InputError on an unknown name.
  static CheckSet parse(std::string_view list);
};

/// Exit codes shared by the CLI and the scanner.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// One report record. Checks that were not requested stay empty and are
/// written as null.
struct GroupRecord {
  std::string group;
  std::int64_t order = 0;
  std::int64_t psi = 0;
  std::size_t num_irreducibles = 0;
  std::uint64_t dixon_prime = 0;
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> multiplicities;
  std::vector<std::size_t> zero_rows;
  std::int64_t min_multiplicity = 0;
  std::optional<std::int64_t> m_of_g;
  std::optional<bool> theorem_a_ok;
  std::optional<bool> theorem_b_ok;
  std::optional<bool> artin_ok;
  std::optional<bool> zeros_ok;
  bool identities_ok = false;
  std::optional<std::string> error;
  /// True if the error came from bad input rather than a failed computation.
  bool input_error = false;

  /// No error and every check that ran succeeded.
  bool passed() const;
  /// Compact single-line JSON with a fixed key order.
  std::string to_json_line() const;
};

/// Computes the character table and runs the requested checks:
///   theorem-a  minimal multiple equals |G|, Sylow witnesses are
///              non-integral for every p | |G| and b < a
///   theorem-b  Galois-orbit and unconjugated forms agree with the direct
///              inner product; Moebius form agrees on linear rows
///   artin      integer decomposition over induced cyclic characters
///   zeros      each zero multiplicity re-derived by the Galois-orbit form
/// Identities: [Xi, 1] = psi, sum [Xi, chi] chi(1) = |G|, and some
/// multiplicity is negative when |G| > 1.
/// Exceptions are captured in `error`.
GroupRecord verify_group(const std::string& name, const GroupPtr& group, const CheckSet& checks);

struct ScanJob {
  std::vector<GroupSpecifier> groups;
  CheckSet checks;
  std::optional<std::filesystem::path> output;
  unsigned workers = 1;
  std::size_t cap = kDefaultClosureCap;
};

struct ScanSummary {
  std::size_t groups = 0;
  std::size_t passed = 0;
  std::size_t failures = 0;
  std::size_t errors = 0;
  std::vector<std::string> zero_constituent_groups;
};

struct ScanReport {
  std::vector<GroupRecord> records;
  ScanSummary summary;

  /// JSON lines: one record per group in input order, then the summary.
  std::string to_json_lines() const;
  int exit_code() const;
};

/// Builds and verifies every group of the job on a bounded worker pool.
/// Records come back in input order, so the report does not depend on the
/// worker count. Writes the report to job.output when set.
ScanReport run_scan(const ScanJob& job);

}  // namespace xichar
