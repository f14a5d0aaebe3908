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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xichar/character_table.hpp"
#include "xichar/class_function.hpp"
#include "xichar/cyclotomic.hpp"
#include "xichar/finite_group.hpp"
#include "xichar/linear_character.hpp"

namespace xichar {

/// Xi(g) = |G| * o(g), with values in Q(zeta_n). n defaults to the exponent
/// of G so Xi can be paired with character table rows directly.
ClassFunction xi_class_function(const GroupPtr& group, std::optional<std::int64_t> order = {});

/// Multiplicities [Xi, chi] for every row of a character table.
struct XiReport {
  std::string group;
  std::int64_t order = 0;
  std::int64_t psi = 0;
  std::vector<std::int64_t> multiplicities;  // aligned with table rows
  std::int64_t min_multiplicity = 0;
  std::vector<std::size_t> zero_rows;
};

/// [Xi, chi_row] by the conjugated inner product. Throws NotRationalInteger
/// if the result is not an integer.
std::int64_t xi_multiplicity(const CharacterTable& table, std::size_t row);

/// sum_g o(g) chi(g) without complex conjugation. Agrees with
/// xi_multiplicity because Xi is rational and the multiplicity is an integer.
std::int64_t xi_multiplicity_unconjugated(const CharacterTable& table, std::size_t row);

XiReport xi_multiplicities(const CharacterTable& table, std::string group_name = {});

/// Elements grouped by the value chi takes on them, and those values grouped
/// into Galois orbits.
struct FiberDecomposition {
  std::size_t row = 0;
  /// Distinct values of chi in class order, with psi and size of each fiber
  /// G_{chi,alpha} = { g : chi(g) = alpha }.
  std::vector<Cyclotomic> values;
  std::vector<std::int64_t> value_psi;
  std::vector<std::int64_t> value_sizes;
  std::vector<std::size_t> orbit_of_value;
  /// One entry per Galois orbit: representative, psi of its fiber, and its
  /// trace down to Q.
  std::vector<Cyclotomic> reps;
  std::vector<std::int64_t> fiber_psi;
  std::vector<BigInt> traces;
};

struct FiberMultiplicity {
  std::int64_t value = 0;
  FiberDecomposition decomposition;
};

/// [Xi, chi] as sum over Galois orbit representatives alpha of
/// psi(G_{chi,alpha}) * Tr_{Q(alpha)/Q}(alpha). Throws InternalError if two
/// fibers over one orbit have different psi.
FiberMultiplicity theorem_b_multiplicity(const CharacterTable& table, std::size_t row);

struct MoebiusTerm {
  std::int64_t d = 0;
  std::int64_t coset_psi = 0;  // psi(g^d K)
  int mu = 0;                  // mu(m / d)
};

struct MoebiusMultiplicity {
  std::int64_t value = 0;
  std::int64_t index = 0;  // m = |G : Ker lambda|
  std::vector<MoebiusTerm> terms;
};

/// [Xi, lambda] for a linear character as sum_{d | m} psi(g^d K) mu(m/d).
/// Throws NotLinear unless the row has degree one.
MoebiusMultiplicity linear_moebius_multiplicity(const CharacterTable& table, std::size_t row);

/// Evidence that m = p^b * n with p^b < |G|_p cannot make m*o(.) a
/// generalized character: restricted to a Sylow p-subgroup P, the
/// multiplicity of 1_P is n * psi(P) / p^(a-b), which is not an integer.
struct SylowWitness {
  std::int64_t p = 0;
  int a = 0;  // |G|_p = p^a
  int b = 0;
  std::int64_t n = 0;
  std::int64_t sylow_order = 0;
  std::int64_t sylow_psi = 0;
  BigRational value;
};

/// n defaults to the p'-part of |G|. Requires p | |G|, 0 <= b < a and
/// gcd(n, p) = 1. Throws WitnessUnexpectedlyIntegral if the value is an
/// integer.
SylowWitness sylow_witness(const FiniteGroup& g, std::int64_t p, int b,
                           std::optional<std::int64_t> n = {});

struct MinimalityReport {
  std::string group;
  std::int64_t order = 0;
  /// [o, chi] = [Xi, chi] / |G| for every row.
  std::vector<BigRational> order_multiplicities;
  std::int64_t m_of_g = 0;
  bool equals_order = false;
  /// One witness per prime divisor p of |G|, for b = a - 1.
  std::vector<SylowWitness> witnesses;
};

/// Least m with m*o(.) a generalized character: the lcm of the denominators
/// of [o, chi] in lowest terms.
MinimalityReport minimal_m(const CharacterTable& table, std::string group_name = {});

struct ZeroScanEntry {
  std::string group;
  std::int64_t order = 0;
  std::size_t num_irreducibles = 0;
  std::vector<std::size_t> zero_rows;
  std::int64_t min_multiplicity = 0;
  std::optional<std::string> error;
};

/// For each group: Xi multiplicities, with every zero re-derived through
/// theorem_b_multiplicity. Per-group failures are recorded and the scan
/// continues. Output order follows input order for any worker count.
std::vector<ZeroScanEntry> zero_constituent_scan(
    std::span<const std::pair<std::string, GroupPtr>> groups, unsigned workers = 1);

}  // namespace xichar
