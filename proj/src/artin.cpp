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

#include "xichar/artin.hpp"

#include <algorithm>

#include "xichar/errors.hpp"
#include "xichar/hnf.hpp"

namespace xichar {

InducedCharacter induce_trivial(const FiniteGroup& g, const Subgroup& c) {
  InducedCharacter out;
  out.source = c;
  const auto& cls = g.classes();
  std::vector<std::int64_t> hits(cls.size(), 0);
  for (ElementIndex x : c.members) ++hits[g.class_of(x)];
  out.values.resize(cls.size());
  for (ClassIndex k = 0; k < cls.size(); ++k) {
    const std::int64_t num = g.centralizer_order(k) * hits[k];
    if (num % c.order() != 0)
      throw NonIntegralInducedValue("induced value at class " + std::to_string(k) + " is not an integer");
    out.values[k] = num / c.order();
  }
  return out;
}

ArtinDecomposition artin_decompose(const FiniteGroup& g, std::span<const std::int64_t> class_values) {
  const std::size_t r = g.num_classes();
  if (class_values.size() != r) throw InputError("class function has the wrong length");

  ArtinDecomposition out;
  const auto subgroups = g.cyclic_subgroups_up_to_conjugacy();
  const auto gen_classes = g.cyclic_subgroup_classes();
  for (std::size_t s = 0; s < subgroups.size(); ++s) {
    InducedCharacter ind = induce_trivial(g, subgroups[s]);
    ind.generator_class = gen_classes[s];
    ind.generator_order = g.classes().rep_orders[gen_classes[s]];
    out.induced.push_back(std::move(ind));
  }

  IntMatrix a(r, std::vector<BigInt>(subgroups.size()));
  std::vector<BigInt> b(r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t s = 0; s < subgroups.size(); ++s) a[k][s] = static_cast<long>(out.induced[s].values[k]);
    b[k] = static_cast<long>(class_values[k]);
  }

  auto x = solve_integer_system(a, b);
  if (!x) throw NoIntegerSolution("no integer combination of induced cyclic characters matches");
  out.coefficients = std::move(*x);

  out.residual.assign(r, 0);
  for (std::size_t k = 0; k < r; ++k) {
    BigInt sum = 0;
    for (std::size_t s = 0; s < subgroups.size(); ++s) sum += a[k][s] * out.coefficients[s];
    out.residual[k] = sum - b[k];
  }
  if (!std::all_of(out.residual.begin(), out.residual.end(), [](const BigInt& v) { return sgn(v) == 0; }))
    throw NoIntegerSolution("integer solution failed re-evaluation");
  return out;
}

ArtinDecomposition artin_decompose_xi(const FiniteGroup& g) {
  const auto& cls = g.classes();
  std::vector<std::int64_t> xi(cls.size());
  for (ClassIndex c = 0; c < cls.size(); ++c) xi[c] = g.order() * cls.rep_orders[c];
  return artin_decompose(g, xi);
}

}  // namespace xichar
