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

#include "xichar/xi.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"
#include "xichar/parallel.hpp"

namespace xichar {

ClassFunction xi_class_function(const GroupPtr& group, std::optional<std::int64_t> order) {
  const auto& cls = group->classes();
  std::vector<std::int64_t> values(cls.size());
  for (ClassIndex c = 0; c < cls.size(); ++c) values[c] = group->order() * cls.rep_orders[c];
  return ClassFunction::from_integers(group, values, order.value_or(group->exponent()));
}

std::int64_t xi_multiplicity(const CharacterTable& table, std::size_t row) {
  const ClassFunction xi = xi_class_function(table.group_ptr(), table.ambient_order());
  return to_int64(as_integer(inner_product(xi, table.row(row))));
}

std::int64_t xi_multiplicity_unconjugated(const CharacterTable& table, std::size_t row) {
  const auto& g = table.group();
  const auto& cls = g.classes();
  Cyclotomic sum(table.ambient_order());
  for (ClassIndex c = 0; c < cls.size(); ++c)
    sum += table.row(row)[c] * make_rational(cls.class_sizes[c] * cls.rep_orders[c]);
  return to_int64(as_integer(sum));
}

XiReport xi_multiplicities(const CharacterTable& table, std::string group_name) {
  XiReport report;
  report.group = std::move(group_name);
  report.order = table.group().order();
  report.psi = table.group().psi();
  const ClassFunction xi = xi_class_function(table.group_ptr(), table.ambient_order());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::int64_t m = to_int64(as_integer(inner_product(xi, table.row(i))));
    report.multiplicities.push_back(m);
    if (m == 0) report.zero_rows.push_back(i);
  }
  report.min_multiplicity =
      *std::min_element(report.multiplicities.begin(), report.multiplicities.end());
  return report;
}

FiberMultiplicity theorem_b_multiplicity(const CharacterTable& table, std::size_t row) {
  const auto& g = table.group();
  const auto& cls = g.classes();
  const ClassFunction& chi = table.row(row);

  FiberMultiplicity out;
  FiberDecomposition& fd = out.decomposition;
  fd.row = row;
  std::map<Cyclotomic, std::size_t> index_of_value;
  for (ClassIndex c = 0; c < cls.size(); ++c) {
    auto [it, inserted] = index_of_value.emplace(chi[c], fd.values.size());
    if (inserted) {
      fd.values.push_back(chi[c]);
      fd.value_psi.push_back(0);
      fd.value_sizes.push_back(0);
    }
    fd.value_psi[it->second] += cls.class_sizes[c] * cls.rep_orders[c];
    fd.value_sizes[it->second] += cls.class_sizes[c];
  }

  const GaloisOrbits orbits = galois_orbit_representatives(fd.values);
  fd.orbit_of_value = orbits.orbit_of;
  fd.reps = orbits.reps;
  for (std::size_t r = 0; r < orbits.reps.size(); ++r) {
    fd.fiber_psi.push_back(fd.value_psi[orbits.rep_source[r]]);
    const BigRational tr = trace_over_q(orbits.reps[r]);
    if (tr.get_den() != 1)
      throw NotRationalInteger("trace of " + orbits.reps[r].to_string() + " is not an integer");
    fd.traces.push_back(tr.get_num());
  }
  // Galois conjugation permutes classes and preserves element orders.
  for (std::size_t v = 0; v < fd.values.size(); ++v) {
    if (fd.value_psi[v] != fd.fiber_psi[fd.orbit_of_value[v]])
      throw InternalError("fibers over one Galois orbit have different psi in row " +
                          std::to_string(row));
  }

  BigInt total = 0;
  for (std::size_t r = 0; r < fd.reps.size(); ++r) total += fd.traces[r] * BigInt(static_cast<long>(fd.fiber_psi[r]));
  out.value = to_int64(total);
  return out;
}

MoebiusMultiplicity linear_moebius_multiplicity(const CharacterTable& table, std::size_t row) {
  if (!table.is_linear(row))
    throw NotLinear("row " + std::to_string(row) + " has degree " + std::to_string(table.degree(row)));
  const auto& g = table.group();
  const KernelCosets kc = kernel_and_cosets(table.row(row));
  MoebiusMultiplicity out;
  out.index = kc.index;
  for (std::int64_t d : divisors(kc.index)) {
    MoebiusTerm term;
    term.d = d;
    term.coset_psi = g.psi(kc.coset(d).members);
    term.mu = mobius(kc.index / d);
    out.value += term.coset_psi * term.mu;
    out.terms.push_back(term);
  }
  return out;
}

SylowWitness sylow_witness(const FiniteGroup& g, std::int64_t p, int b, std::optional<std::int64_t> n) {
  if (!is_prime(p) || g.order() % p != 0)
    throw InputError("sylow_witness needs a prime dividing |G|, got " + std::to_string(p));
  SylowWitness w;
  w.p = p;
  w.a = p_valuation(g.order(), p);
  w.b = b;
  w.n = n.value_or(p_prime_part(g.order(), p));
  if (b < 0 || b >= w.a) throw InputError("sylow_witness needs 0 <= b < a");
  if (w.n < 1 || w.n % p == 0) throw InputError("sylow_witness needs n >= 1 prime to p");

  const Subgroup sylow = g.sylow_subgroup(p);
  w.sylow_order = sylow.order();
  w.sylow_psi = g.psi(sylow.members);
  w.value = make_rational(w.n * w.sylow_psi, ipow(p, w.a - w.b));

  // The same number as an inner product over P: [m*o restricted to P, 1_P].
  const std::int64_t m = ipow(p, b) * w.n;
  BigRational direct = 0;
  for (ElementIndex x : sylow.members) direct += make_rational(m * g.element_order(x));
  direct /= make_rational(sylow.order());
  if (direct != w.value) throw InternalError("Sylow witness disagrees with the restricted inner product");

  if (w.value.get_den() == 1)
    throw WitnessUnexpectedlyIntegral("n*psi(P)/p^(a-b) = " + w.value.get_str() + " is an integer for p = " +
                                      std::to_string(p));
  return w;
}

MinimalityReport minimal_m(const CharacterTable& table, std::string group_name) {
  const auto& g = table.group();
  const XiReport xi = xi_multiplicities(table);
  MinimalityReport out;
  out.group = std::move(group_name);
  out.order = g.order();
  BigInt m = 1;
  for (auto mult : xi.multiplicities) {
    BigRational q = make_rational(mult, g.order());
    m = lcm(m, BigInt(q.get_den()));
    out.order_multiplicities.push_back(std::move(q));
  }
  out.m_of_g = to_int64(m);
  out.equals_order = out.m_of_g == g.order();
  for (auto p : prime_divisors(g.order()))
    out.witnesses.push_back(sylow_witness(g, p, p_valuation(g.order(), p) - 1));
  return out;
}

std::vector<ZeroScanEntry> zero_constituent_scan(
    std::span<const std::pair<std::string, GroupPtr>> groups, unsigned workers) {
  std::vector<ZeroScanEntry> out(groups.size());
  parallel_for(groups.size(), workers, [&](std::size_t i) {
    ZeroScanEntry& entry = out[i];
    entry.group = groups[i].first;
    try {
      const GroupPtr& g = groups[i].second;
      entry.order = g->order();
      const CharacterTable table = CharacterTable::compute(g);
      const XiReport xi = xi_multiplicities(table, entry.group);
      entry.num_irreducibles = table.size();
      entry.min_multiplicity = xi.min_multiplicity;
      for (std::size_t row : xi.zero_rows) {
        if (theorem_b_multiplicity(table, row).value != 0)
          throw InternalError("zero multiplicity in row " + std::to_string(row) +
                              " not confirmed by the Galois-orbit formula");
      }
      entry.zero_rows = xi.zero_rows;
    } catch (const std::exception& e) {
      entry.error = e.what();
    }
  });
  return out;
}

}  // namespace xichar
