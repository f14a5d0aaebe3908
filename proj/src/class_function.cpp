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

#include "xichar/class_function.hpp"

#include <numeric>

#include "xichar/errors.hpp"

namespace xichar {

ClassFunction ClassFunction::from_integers(GroupPtr group, const std::vector<std::int64_t>& values,
                                           std::int64_t order) {
  ClassFunction f{std::move(group), {}};
  f.values.reserve(values.size());
  for (auto v : values) f.values.push_back(Cyclotomic::rational(make_rational(v), order));
  return f;
}

ClassFunction ClassFunction::trivial(GroupPtr group, std::int64_t order) {
  std::vector<std::int64_t> ones(group->num_classes(), 1);
  return from_integers(std::move(group), ones, order);
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.group != h.group && f.group.get() != h.group.get())
    throw InputError("inner product of class functions on different groups");
  const FiniteGroup& g = *f.group;
  const std::int64_t n = std::lcm(f.ambient_order(), h.ambient_order());
  Cyclotomic sum(n);
  for (ClassIndex c = 0; c < g.num_classes(); ++c) {
    Cyclotomic term = f[c].embed(n) * h[c].embed(n).conj();
    term *= make_rational(g.classes().class_sizes[c]);
    sum += term;
  }
  sum *= make_rational(1, g.order());
  return sum;
}

}  // namespace xichar
