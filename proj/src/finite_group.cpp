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

#include "xichar/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"

namespace xichar {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

bool is_power_of(std::int64_t n, std::int64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

struct FiniteGroup::PowerMapCache {
  std::mutex mutex;
  std::map<std::int64_t, std::vector<ClassIndex>> maps;
};

FiniteGroup::FiniteGroup(FiniteGroup&&) noexcept = default;
FiniteGroup& FiniteGroup::operator=(FiniteGroup&&) noexcept = default;
FiniteGroup::~FiniteGroup() = default;

bool Subgroup::contains(ElementIndex x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

FiniteGroup FiniteGroup::close(std::size_t degree, std::vector<Permutation> generators,
                               std::size_t cap) {
  if (cap < 1) throw InputError("closure cap must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree)
      throw InvalidPermutation("generator " + g.to_cycle_string() + " has degree " +
                               std::to_string(g.degree()) + ", expected " +
                               std::to_string(degree));
  }

  FiniteGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(std::move(id));
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators_) {
      Permutation y = x * g;
      if (seen.contains(y)) continue;
      if (seen.size() >= cap)
        throw ClosureCapExceeded("group order exceeds the closure cap of " +
                                 std::to_string(cap));
      seen.insert(y);
      queue.push_back(std::move(y));
    }
  }

  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  group.compute_derived();
  return group;
}

void FiniteGroup::compute_derived() {
  const auto n = elements_.size();
  power_maps_ = std::make_unique<PowerMapCache>();

  inverses_.resize(n);
  orders_.resize(n);
  exponent_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    inverses_[i] = index_of(elements_[i].inverse());
    orders_[i] = static_cast<std::int64_t>(elements_[i].order());
    exponent_ = std::lcm(exponent_, orders_[i]);
  }

  std::vector<ElementIndex> gen_index;
  for (const auto& g : generators_) gen_index.push_back(index_of(g));

  constexpr auto kUnassigned = static_cast<ClassIndex>(-1);
  classes_.class_of.assign(n, kUnassigned);
  std::vector<ElementIndex> stack;
  for (ElementIndex a = 0; a < n; ++a) {
    if (classes_.class_of[a] != kUnassigned) continue;
    const ClassIndex c = classes_.class_reps.size();
    classes_.class_reps.push_back(a);
    classes_.rep_orders.push_back(orders_[a]);
    std::int64_t size = 0;
    classes_.class_of[a] = c;
    stack.assign(1, a);
    while (!stack.empty()) {
      const ElementIndex y = stack.back();
      stack.pop_back();
      ++size;
      for (ElementIndex g : gen_index) {
        const ElementIndex z = conjugate(y, g);
        if (classes_.class_of[z] == kUnassigned) {
          classes_.class_of[z] = c;
          stack.push_back(z);
        }
      }
    }
    classes_.class_sizes.push_back(size);
  }
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<ElementIndex>(it - elements_.begin());
}

ElementIndex FiniteGroup::index_of(const Permutation& p) const {
  auto idx = find(p);
  if (!idx) throw InvalidPermutation(p.to_cycle_string() + " is not an element of the group");
  return *idx;
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const {
  return index_of(elements_[a] * elements_[b]);
}

ElementIndex FiniteGroup::power(ElementIndex a, std::int64_t k) const {
  return index_of(elements_[a].pow(k));
}

ElementIndex FiniteGroup::conjugate(ElementIndex a, ElementIndex x) const {
  return index_of(elements_[inverses_[x]] * elements_[a] * elements_[x]);
}

const std::vector<ClassIndex>& FiniteGroup::power_map(std::int64_t k) const {
  const std::int64_t key = mod_floor(k, exponent_);
  std::lock_guard lock(power_maps_->mutex);
  auto it = power_maps_->maps.find(key);
  if (it != power_maps_->maps.end()) return it->second;
  std::vector<ClassIndex> map(classes_.size());
  for (ClassIndex c = 0; c < classes_.size(); ++c)
    map[c] = class_of(power(classes_.class_reps[c], key));
  return power_maps_->maps.emplace(key, std::move(map)).first->second;
}

std::int64_t FiniteGroup::psi() const {
  return std::accumulate(orders_.begin(), orders_.end(), std::int64_t{0});
}

std::int64_t FiniteGroup::psi(std::span<const ElementIndex> subset) const {
  std::int64_t total = 0;
  for (ElementIndex x : subset) total += orders_[x];
  return total;
}

Subgroup FiniteGroup::generated_subgroup(std::span<const ElementIndex> gens) const {
  std::vector<bool> in(elements_.size(), false);
  std::vector<ElementIndex> members{identity_index()};
  in[identity_index()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const ElementIndex x = members[head];
    for (ElementIndex g : gens) {
      const ElementIndex y = multiply(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup FiniteGroup::cyclic_subgroup(ElementIndex x) const {
  const ElementIndex g[] = {x};
  return generated_subgroup(g);
}

Subgroup FiniteGroup::conjugate_subgroup(const Subgroup& h, ElementIndex x) const {
  Subgroup out;
  out.members.reserve(h.members.size());
  for (ElementIndex y : h.members) out.members.push_back(conjugate(y, x));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

bool FiniteGroup::normalizes(ElementIndex x, const Subgroup& h) const {
  for (ElementIndex y : h.members)
    if (!h.contains(conjugate(y, x))) return false;
  return true;
}

std::vector<ClassIndex> FiniteGroup::cyclic_subgroup_classes() const {
  // <x> and <y> are conjugate iff y is conjugate to a generator x^k of <x>.
  std::vector<bool> covered(classes_.size(), false);
  std::vector<ClassIndex> out;
  for (ClassIndex c = 0; c < classes_.size(); ++c) {
    if (covered[c]) continue;
    out.push_back(c);
    const ElementIndex rep = classes_.class_reps[c];
    const std::int64_t o = classes_.rep_orders[c];
    for (std::int64_t k = 1; k <= o; ++k)
      if (std::gcd(k, o) == 1) covered[class_of(power(rep, k))] = true;
  }
  return out;
}

std::vector<Subgroup> FiniteGroup::cyclic_subgroups_up_to_conjugacy() const {
  std::vector<Subgroup> out;
  for (ClassIndex c : cyclic_subgroup_classes())
    out.push_back(cyclic_subgroup(classes_.class_reps[c]));
  return out;
}

Subgroup FiniteGroup::sylow_subgroup(std::int64_t p) const {
  const std::int64_t target = p_part(order(), p);
  if (target == 1) return Subgroup{{identity_index()}};

  ElementIndex start = identity_index();
  for (ElementIndex x = 0; x < elements_.size(); ++x)
    if (is_power_of(orders_[x], p) && orders_[x] > orders_[start]) start = x;

  std::vector<ElementIndex> gens{start};
  Subgroup h = generated_subgroup(gens);
  while (h.order() < target) {
    bool grown = false;
    for (ElementIndex x = 0; x < elements_.size(); ++x) {
      if (!is_power_of(orders_[x], p) || h.contains(x) || !normalizes(x, h)) continue;
      // x is a p-element normalizing h, so <h, x> = h<x> is again a p-group.
      gens.push_back(x);
      h = generated_subgroup(gens);
      grown = true;
      break;
    }
    if (!grown)
      throw SylowSearchFailed("Sylow " + std::to_string(p) + "-subgroup search stalled at order " +
                              std::to_string(h.order()));
  }
  if (h.order() != target)
    throw SylowSearchFailed("Sylow search overshot the p-part of |G|");
  return h;
}

Coset FiniteGroup::left_coset(ElementIndex rep, const Subgroup& k) const {
  Coset out;
  out.representative = rep;
  out.members.reserve(k.members.size());
  for (ElementIndex z : k.members) out.members.push_back(multiply(rep, z));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace xichar
