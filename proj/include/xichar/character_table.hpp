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
#include <span>
#include <vector>

#include "xichar/class_function.hpp"
#include "xichar/finite_group.hpp"
#include "xichar/modp.hpp"

namespace xichar {

/// Structure constants of the class algebra: a(i, j, k) is the number of
/// pairs (x, y) in K_i x K_j with x*y equal to a fixed element of K_k.
class ClassStructureConstants {
 public:
  explicit ClassStructureConstants(std::size_t num_classes)
      : r_(num_classes), data_(num_classes * num_classes * num_classes, 0) {}

  std::size_t num_classes() const noexcept { return r_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * r_ + j) * r_ + k];
  }
  std::int64_t& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * r_ + j) * r_ + k];
  }

 private:
  std::size_t r_;
  std::vector<std::int64_t> data_;
};

ClassStructureConstants class_mult_coefficients(const FiniteGroup& g);

/// The smallest prime p = 1 (mod exponent) with p^2 > 4|G|, or the
/// (skip+1)-th such prime. The trivial group uses p = 2.
std::uint64_t dixon_prime(const FiniteGroup& g, std::size_t skip = 0);

/// Common eigenvectors of the class matrices M_i[j][k] = a(i, j, k) over
/// F_p, one row per irreducible character, each scaled so that its
/// identity-class coordinate is 1. Entry k of a row is the central
/// character value |K_k| chi(g_k) / chi(1) mod p.
/// Throws SplitFailure if some common eigenspace does not split to
/// dimension one.
modp::Mat modular_character_basis(const FiniteGroup& g, const ClassStructureConstants& a,
                                  std::uint64_t p);

/// The irreducible characters of a group, with exact cyclotomic values in
/// Q(zeta_e), e = exponent(G).
///
/// Rows are sorted by degree, with the trivial character first among the
/// linear ones and ties broken by the printed values, so the table does not
/// depend on the prime used to compute it. Every stored table has passed
/// exact row and column orthogonality checks.
class CharacterTable {
 public:
  /// Dixon-Schneider with the first admissible prime; on a split or lift
  /// failure retries with up to three further primes.
  static CharacterTable compute(GroupPtr group);
  /// Same, starting from the (prime_rank+1)-th admissible prime.
  static CharacterTable compute_with_prime_rank(GroupPtr group, std::size_t prime_rank);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return rows_.size(); }
  std::span<const ClassFunction> rows() const noexcept { return rows_; }
  const ClassFunction& row(std::size_t i) const { return rows_[i]; }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }
  std::span<const std::int64_t> degrees() const noexcept { return degrees_; }
  bool is_linear(std::size_t i) const { return degrees_[i] == 1; }
  std::uint64_t prime() const noexcept { return prime_; }
  /// Cyclotomic order shared by all values (the group exponent).
  std::int64_t ambient_order() const noexcept { return ambient_order_; }

  /// Eigenvalue multiplicities of chi_row at class c: entry k is how often
  /// zeta_e^k occurs as an eigenvalue of a representing matrix.
  std::span<const std::int64_t> eigenvalue_multiplicities(std::size_t row, ClassIndex c) const {
    return multiplicities_[row][c];
  }

  friend bool operator==(const CharacterTable& a, const CharacterTable& b);

 private:
  friend CharacterTable lift_table(GroupPtr group, const modp::Mat& basis, std::uint64_t p);

  GroupPtr group_;
  std::vector<ClassFunction> rows_;
  std::vector<std::int64_t> degrees_;
  std::vector<std::vector<std::vector<std::int64_t>>> multiplicities_;
  std::uint64_t prime_ = 0;
  std::int64_t ambient_order_ = 1;
};

/// Recovers exact character values from the modular basis: for each class,
/// the multiplicity of every e-th root of unity as an eigenvalue is obtained
/// in F_p from the power maps, and chi(g) = sum_k m_k zeta_e^k.
/// Throws LiftInconsistency if a multiplicity is not a small non-negative
/// integer or the result fails orthogonality.
CharacterTable lift_table(GroupPtr group, const modp::Mat& basis, std::uint64_t p);

/// [chi_a, chi_b] computed from eigenvalue multiplicities in Z[C_e].
Cyclotomic row_inner_product(const CharacterTable& t, std::size_t a, std::size_t b);
/// sum_chi chi(c1) conj(chi(c2)) computed the same way.
Cyclotomic column_inner_product(const CharacterTable& t, ClassIndex c1, ClassIndex c2);

/// Exact row and column orthogonality; false on the first violation.
bool rows_orthonormal(const CharacterTable& t);
bool columns_orthogonal(const CharacterTable& t);

/// For every k prime to the exponent, applying zeta -> zeta^k to a row gives
/// another row, and equals the row composed with the k-th power map.
bool galois_consistent(const CharacterTable& t);

}  // namespace xichar
