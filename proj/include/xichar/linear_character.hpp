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

#include <cstdint>
#include <vector>

#include "xichar/class_function.hpp"
#include "xichar/finite_group.hpp"

namespace xichar {

/// Kernel K of a linear character, the index m = |G:K|, and the cosets
/// g^d K for d = 1..m where gK generates the cyclic quotient G/K.
struct KernelCosets {
  Subgroup kernel;
  std::int64_t index = 1;
  ElementIndex generator = 0;
  std::vector<Coset> cosets;  // cosets[d - 1] = g^d K

  const Coset& coset(std::int64_t d) const { return cosets[static_cast<std::size_t>(d - 1)]; }
};

/// Throws NotLinear if lambda(1) != 1 or lambda fails a deterministic
/// multiplicativity spot-check on pseudo-random pairs of elements.
/// The generator g is the least element whose value is a primitive m-th
/// root of unity.
KernelCosets kernel_and_cosets(const ClassFunction& lambda);

}  // namespace xichar
