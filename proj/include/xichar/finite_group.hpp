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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "xichar/permutation.hpp"

namespace xichar {

using ElementIndex = std::uint32_t;
using ClassIndex = std::size_t;

inline constexpr std::size_t kDefaultClosureCap = 200000;

/// Conjugacy class partition. Class 0 is the identity class; classes are
/// ordered by their representative, the least element index in the class.
struct ConjugacyData {
  std::vector<ElementIndex> class_reps;
  std::vector<std::int64_t> class_sizes;
  std::vector<ClassIndex> class_of;  // indexed by element
  std::vector<std::int64_t> rep_orders;

  std::size_t size() const noexcept { return class_reps.size(); }
};

/// A subgroup given by the sorted indices of its members in the parent group.
struct Subgroup {
  std::vector<ElementIndex> members;

  std::int64_t order() const noexcept { return static_cast<std::int64_t>(members.size()); }
  bool contains(ElementIndex x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// The left coset representative * K of a subgroup K.
struct Coset {
  ElementIndex representative = 0;
  std::vector<ElementIndex> members;  // sorted
};

/// An explicitly enumerated permutation group.
///
/// Elements are kept sorted lexicographically by image array, so the
/// identity always has index 0 and every derived listing is deterministic.
/// Conjugacy classes and element orders are computed at construction; power
/// maps are computed on first request and cached behind a mutex, so a
/// constructed group can be shared freely between threads.
class FiniteGroup {
 public:
  /// Enumerates the group generated by `generators` by closing the identity
  /// under right multiplication. Throws ClosureCapExceeded if the group has
  /// more than `cap` elements and InvalidPermutation if a generator has the
  /// wrong degree.
  static FiniteGroup close(std::size_t degree, std::vector<Permutation> generators,
                           std::size_t cap = kDefaultClosureCap);

  FiniteGroup(FiniteGroup&&) noexcept;
  FiniteGroup& operator=(FiniteGroup&&) noexcept;
  ~FiniteGroup();

  std::size_t degree() const noexcept { return degree_; }
  std::int64_t order() const noexcept { return static_cast<std::int64_t>(elements_.size()); }
  std::span<const Permutation> generators() const noexcept { return generators_; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  const Permutation& element(ElementIndex i) const { return elements_[i]; }

  static constexpr ElementIndex identity_index() noexcept { return 0; }
  std::optional<ElementIndex> find(const Permutation& p) const;
  /// Like find, but the permutation must be an element.
  ElementIndex index_of(const Permutation& p) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const noexcept { return inverses_[a]; }
  ElementIndex power(ElementIndex a, std::int64_t k) const;
  /// x^-1 * a * x
  ElementIndex conjugate(ElementIndex a, ElementIndex x) const;

  std::int64_t element_order(ElementIndex a) const noexcept { return orders_[a]; }
  std::span<const std::int64_t> element_orders() const noexcept { return orders_; }
  /// lcm of all element orders.
  std::int64_t exponent() const noexcept { return exponent_; }

  const ConjugacyData& classes() const noexcept { return classes_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  ClassIndex class_of(ElementIndex a) const noexcept { return classes_.class_of[a]; }
  std::int64_t centralizer_order(ClassIndex c) const {
    return order() / classes_.class_sizes[c];
  }
  ClassIndex inverse_class(ClassIndex c) const {
    return class_of(inverse(classes_.class_reps[c]));
  }

  /// Entry c is the class of rep(c)^k. Any integer k is accepted; maps for
  /// k and k' congruent modulo the exponent coincide.
  const std::vector<ClassIndex>& power_map(std::int64_t k) const;

  /// Sum of element orders over the whole group.
  std::int64_t psi() const;
  /// Sum of element orders over a subset of element indices.
  std::int64_t psi(std::span<const ElementIndex> subset) const;

  /// Smallest subgroup containing the given elements.
  Subgroup generated_subgroup(std::span<const ElementIndex> gens) const;
  Subgroup cyclic_subgroup(ElementIndex x) const;
  /// Members of x^-1 * H * x, sorted.
  Subgroup conjugate_subgroup(const Subgroup& h, ElementIndex x) const;
  bool normalizes(ElementIndex x, const Subgroup& h) const;

  /// One cyclic subgroup per conjugacy class of cyclic subgroups, listed in
  /// the order of the conjugacy class of their generator. The first entry
  /// is the trivial subgroup.
  std::vector<Subgroup> cyclic_subgroups_up_to_conjugacy() const;

  /// Generating class for each entry of cyclic_subgroups_up_to_conjugacy().
  std::vector<ClassIndex> cyclic_subgroup_classes() const;

  /// A Sylow p-subgroup, grown greedily from an element of maximal p-power
  /// order. p must be prime; for p not dividing |G| the trivial subgroup
  /// is returned.
  Subgroup sylow_subgroup(std::int64_t p) const;

  /// { rep * z : z in K }
  Coset left_coset(ElementIndex rep, const Subgroup& k) const;

 private:
  struct PowerMapCache;

  FiniteGroup() = default;
  void compute_derived();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ElementIndex> inverses_;
  std::vector<std::int64_t> orders_;
  std::int64_t exponent_ = 1;
  ConjugacyData classes_;
  std::unique_ptr<PowerMapCache> power_maps_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

}  // namespace xichar
