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
#include <optional>
#include <utility>
#include <vector>

#include "xichar/cyclotomic.hpp"

namespace xichar {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

/// Column-style Hermite normal form: a * u = h with u unimodular and h in
/// column echelon form. Each pivot (row, col) has h[row][col] > 0, zeros to
/// its right, and entries to its left reduced into [0, h[row][col]).
struct ColumnHermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

ColumnHermiteForm column_hermite_form(const IntMatrix& a);

/// One integer solution of a x = b, or nullopt if there is none. Free
/// variables are set to zero in the Hermite basis.
std::optional<std::vector<BigInt>> solve_integer_system(const IntMatrix& a, const std::vector<BigInt>& b);

}  // namespace xichar
