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

#include "xichar/cyclotomic.hpp"
#include "xichar/finite_group.hpp"

namespace xichar {

/// A function on a group that is constant on conjugacy classes, stored as
/// one value per class. All values share one cyclotomic order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& operator[](ClassIndex c) const { return values[c]; }
  const Cyclotomic& at_element(ElementIndex x) const { return values[group->class_of(x)]; }
  std::int64_t ambient_order() const { return values.empty() ? 1 : values[0].order(); }

  /// The rational-valued class function with the given integer values.
  static ClassFunction from_integers(GroupPtr group, const std::vector<std::int64_t>& values,
                                     std::int64_t order = 1);

  /// The trivial character 1_G.
  static ClassFunction trivial(GroupPtr group, std::int64_t order = 1);
};

/// [f, h] = (1/|G|) sum_classes |K| f(K) conj(h(K)). Values are embedded into
/// a common cyclotomic field first.
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

}  // namespace xichar
