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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xichar/finite_group.hpp"
#include "xichar/group_file.hpp"

namespace xichar {

enum class Family { Cyclic, Dihedral, Symmetric, Alternating, Quaternion, SL23 };

struct FamilyFactor {
  Family family = Family::Cyclic;
  int n = 1;

  std::string name() const;
  friend bool operator==(const FamilyFactor&, const FamilyFactor&) = default;
};

/// A built-in group (a direct product of one or more family members) or a
/// group description file.
///
/// Grammar:
///   C:n  cyclic of order n           D:n  dihedral of order 2n
///   S:n  symmetric, n <= 8           A:n  alternating, n <= 8
///   Q:n  generalized quaternion of order n = 8, 16, 32, 64
///   SL23 SL(2,3)
///   F1xF2x...  direct product        file:<path>
struct GroupSpecifier {
  std::vector<FamilyFactor> factors;
  std::optional<std::filesystem::path> file;

  std::string canonical_name() const;
  friend bool operator==(const GroupSpecifier&, const GroupSpecifier&) = default;
};

/// Throws ParseError (with the offending position) or UnsupportedFamily.
GroupSpecifier parse_specifier(std::string_view text);

/// Degree and generators of the permutation realization.
GroupDescription describe(const GroupSpecifier& spec);

GroupPtr build_group(const GroupSpecifier& spec, std::size_t cap = kDefaultClosureCap);

/// C:n and D:n for n <= 64, S:n and A:n for n <= 6, Q:8, Q:16, Q:32, SL23
/// and C:mxC:n for 2 <= m <= n with m*n <= 64.
std::vector<GroupSpecifier> default_catalog();

}  // namespace xichar
