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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "xichar/permutation.hpp"

namespace xichar {

/// Contents of a group description file:
///
///     # comment
///     degree 7
///     (0 1 2 3 4 5 6)
///     (1 2 4)(3 6 5)
///
/// Blank lines and everything after '#' are ignored.
struct GroupDescription {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

GroupDescription parse_group_description(std::string_view text);

/// Reads and parses a file; throws InputError if it cannot be read.
GroupDescription load_group_description(const std::filesystem::path& path);

std::string format_group_description(const GroupDescription& desc);

}  // namespace xichar
