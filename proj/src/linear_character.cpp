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

#include "xichar/linear_character.hpp"

#include <algorithm>
#include <random>

#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"

namespace xichar {

namespace {

constexpr int kSpotChecks = 32;

bool is_primitive_root_of_unity(const Cyclotomic& x, std::int64_t m) {
  const Cyclotomic one = Cyclotomic::rational(1, x.order());
  if (!(x.pow(m) == one)) return false;
  for (auto q : prime_divisors(m))
    if (x.pow(m / q) == one) return false;
  return true;
}

}  // namespace

KernelCosets kernel_and_cosets(const ClassFunction& lambda) {
  const FiniteGroup& g = *lambda.group;
  const std::int64_t n = lambda.ambient_order();
  const Cyclotomic one = Cyclotomic::rational(1, n);
  if (!(lambda[0] == one)) throw NotLinear("value at the identity is " + lambda[0].to_string());

  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<ElementIndex> pick(0, static_cast<ElementIndex>(g.order() - 1));
  for (int i = 0; i < kSpotChecks; ++i) {
    const ElementIndex x = pick(rng), y = pick(rng);
    if (!(lambda.at_element(g.multiply(x, y)) == lambda.at_element(x) * lambda.at_element(y)))
      throw NotLinear("class function is not multiplicative");
  }

  KernelCosets out;
  for (ElementIndex x = 0; x < static_cast<ElementIndex>(g.order()); ++x)
    if (lambda.at_element(x) == one) out.kernel.members.push_back(x);
  if (g.order() % out.kernel.order() != 0) throw NotLinear("kernel order does not divide |G|");
  out.index = g.order() / out.kernel.order();

  const auto& cls = g.classes();
  bool found = false;
  for (ClassIndex c = 0; c < cls.size() && !found; ++c) {
    if (is_primitive_root_of_unity(lambda[c], out.index)) {
      out.generator = cls.class_reps[c];
      found = true;
    }
  }
  if (!found) throw NotLinear("no element maps to a primitive root of unity of order |G:K|");

  for (std::int64_t d = 1; d <= out.index; ++d)
    out.cosets.push_back(g.left_coset(g.power(out.generator, d), out.kernel));
  return out;
}

}  // namespace xichar
