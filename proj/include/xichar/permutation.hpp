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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xichar {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products are read left to right: (a * b)(i) = b(a(i)), i.e. apply a
/// first. Ordering is lexicographic on the image arrays, which is the
/// element order used by FiniteGroup.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidPermutation unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses disjoint-cycle notation over 0-based points, e.g. "(0 1 2)(3 4)".
  /// The empty string and "()" denote the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  static Permutation from_cycle_list(
      std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  bool is_identity() const noexcept;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;

  /// The same permutation acting on points [shift, shift+degree) of a
  /// larger set of new_degree points; all other points are fixed.
  Permutation embedded(std::size_t new_degree, std::size_t shift) const;

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

}  // namespace xichar
