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
#include <span>
#include <vector>

#include "xichar/cyclotomic.hpp"
#include "xichar/finite_group.hpp"

namespace xichar {

/// The permutation character (1_C)^G of a cyclic subgroup C.
struct InducedCharacter {
  Subgroup source;
  ClassIndex generator_class = 0;
  std::int64_t generator_order = 1;
  std::vector<std::int64_t> values;  // per class of G
};

/// (1_C)^G(g) = |C_G(g)| * |g^G intersect C| / |C|. Throws
/// NonIntegralInducedValue if a value is not an integer.
InducedCharacter induce_trivial(const FiniteGroup& g, const Subgroup& c);

struct ArtinDecomposition {
  std::vector<InducedCharacter> induced;  // one per class of cyclic subgroups
  std::vector<BigInt> coefficients;
  /// Class values of sum_C coeff_C (1_C)^G minus the target; all zero.
  std::vector<BigInt> residual;
};

/// Integer coefficients c_C with sum_C c_C (1_C)^G equal to the given
/// class function, over the cyclic subgroups up to conjugacy. Solved with a
/// Hermite normal form and re-evaluated before returning. Throws
/// NoIntegerSolution if no integer combination exists.
ArtinDecomposition artin_decompose(const FiniteGroup& g, std::span<const std::int64_t> class_values);

/// artin_decompose applied to Xi(g) = |G| o(g).
ArtinDecomposition artin_decompose_xi(const FiniteGroup& g);

}  // namespace xichar
