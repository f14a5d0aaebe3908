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

#include "xichar/character_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"

namespace xichar {

namespace {

using modp::Elem;
using modp::Field;
using modp::Mat;
using modp::Vec;

struct Eigenspace {
  Mat basis;  // rref rows
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return basis.size(); }
};

Mat class_matrix(const ClassStructureConstants& a, std::size_t i, const Field& f) {
  const std::size_t r = a.num_classes();
  Mat m(r, Vec(r, 0));
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k) m[j][k] = f.from_signed(a(i, j, k));
  return m;
}

// Splits a common eigenspace by the eigenspaces of m restricted to it.
std::vector<Eigenspace> split(const Eigenspace& v, const Mat& m, const Field& f) {
  const std::size_t d = v.dim();
  Mat restricted(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    const Vec image = modp::mat_vec(m, v.basis[t], f);
    for (std::size_t s = 0; s < d; ++s) restricted[s][t] = image[v.pivots[s]];
  }

  const Vec cp = modp::charpoly(restricted, f);
  std::vector<Elem> roots;
  for (Elem x = 0; x < f.p; ++x)
    if (modp::poly_eval(cp, x, f) == 0) roots.push_back(x);
  if (roots.size() == 1) {
    // Diagonalizable with one eigenvalue means scalar; nothing to split.
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = 0; t < d; ++t)
        if (restricted[s][t] != (s == t ? roots[0] : 0))
          throw SplitFailure("class matrix is not diagonalizable modulo " + std::to_string(f.p));
    return {v};
  }

  std::vector<Eigenspace> out;
  std::size_t total = 0;
  for (Elem lambda : roots) {
    Mat shifted = restricted;
    for (std::size_t s = 0; s < d; ++s) shifted[s][s] = f.sub(shifted[s][s], lambda);
    const auto null = modp::nullspace(shifted, d, f);
    Eigenspace e;
    for (const auto& y : null) {
      Vec w(v.basis[0].size(), 0);
      for (std::size_t t = 0; t < d; ++t) {
        if (y[t] == 0) continue;
        for (std::size_t c = 0; c < w.size(); ++c) w[c] = f.add(w[c], f.mul(y[t], v.basis[t][c]));
      }
      e.basis.push_back(std::move(w));
    }
    e.pivots = modp::rref(e.basis, f);
    total += e.dim();
    out.push_back(std::move(e));
  }
  if (total != d)
    throw SplitFailure("eigenspaces of a class matrix do not fill a common eigenspace modulo " +
                       std::to_string(f.p));
  return out;
}

bool is_admissible(std::uint64_t p, std::int64_t exponent, std::int64_t order) {
  return is_prime(static_cast<std::int64_t>(p)) && (p - 1) % static_cast<std::uint64_t>(exponent) == 0 &&
         static_cast<unsigned __int128>(p) * p > static_cast<unsigned __int128>(4) * static_cast<std::uint64_t>(order);
}

// Accumulates sum_k sum_l w * m1[k] * m2[l] into acc[(k - l) mod e].
void accumulate_product(std::span<const std::int64_t> m1, std::span<const std::int64_t> m2,
                        std::int64_t weight, std::vector<std::int64_t>& acc) {
  const std::size_t e = acc.size();
  for (std::size_t k = 0; k < e; ++k) {
    if (m1[k] == 0) continue;
    const std::int64_t wk = weight * m1[k];
    for (std::size_t l = 0; l < e; ++l) {
      if (m2[l] == 0) continue;
      acc[(k + e - l) % e] += wk * m2[l];
    }
  }
}

}  // namespace

ClassStructureConstants class_mult_coefficients(const FiniteGroup& g) {
  const auto& cls = g.classes();
  const std::size_t r = cls.size();
  ClassStructureConstants a(r);
  for (std::size_t k = 0; k < r; ++k) {
    const ElementIndex z = cls.class_reps[k];
    for (ElementIndex x = 0; x < static_cast<ElementIndex>(g.order()); ++x) {
      const ElementIndex y = g.multiply(g.inverse(x), z);
      ++a.at(g.class_of(x), g.class_of(y), k);
    }
  }
  return a;
}

std::uint64_t dixon_prime(const FiniteGroup& g, std::size_t skip) {
  if (g.order() == 1) {
    std::uint64_t p = 2;
    for (std::size_t i = 0; i < skip; ++i) {
      ++p;
      while (!is_prime(static_cast<std::int64_t>(p))) ++p;
    }
    return p;
  }
  const auto e = static_cast<std::uint64_t>(g.exponent());
  std::uint64_t p = e + 1;
  std::size_t found = 0;
  for (;; p += e) {
    if (!is_admissible(p, g.exponent(), g.order())) continue;
    if (found++ == skip) return p;
  }
}

modp::Mat modular_character_basis(const FiniteGroup& g, const ClassStructureConstants& a,
                                  std::uint64_t p) {
  const Field f{p};
  const std::size_t r = a.num_classes();
  std::vector<Eigenspace> spaces(1);
  for (std::size_t i = 0; i < r; ++i) {
    Vec row(r, 0);
    row[i] = 1;
    spaces[0].basis.push_back(std::move(row));
    spaces[0].pivots.push_back(i);
  }

  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Eigenspace& s) { return s.dim() == 1; }))
      break;
    const Mat m = class_matrix(a, i, f);
    std::vector<Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& piece : split(s, m, f)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }

  Mat basis;
  for (const auto& s : spaces) {
    if (s.dim() != 1)
      throw SplitFailure("class matrices leave a common eigenspace of dimension " +
                         std::to_string(s.dim()) + " modulo " + std::to_string(p));
    Vec w = s.basis[0];
    if (w[0] == 0) throw SplitFailure("central character vanishes on the identity class");
    const Elem scale = f.inv(w[0]);
    for (auto& x : w) x = f.mul(x, scale);
    basis.push_back(std::move(w));
  }
  (void)g;
  return basis;
}

CharacterTable lift_table(GroupPtr group, const modp::Mat& basis, std::uint64_t p) {
  const FiniteGroup& g = *group;
  const auto& cls = g.classes();
  const std::size_t r = cls.size();
  const std::int64_t e = g.exponent();
  const auto ue = static_cast<std::size_t>(e);
  const Field f{p};
  if (basis.size() != r) throw LiftInconsistency("modular basis has the wrong number of rows");

  // z is the image of zeta_e under the reduction fixed by this table.
  const Elem z = f.pow(primitive_root(p), (p - 1) / static_cast<std::uint64_t>(e));
  Vec zpow(ue);
  for (std::size_t j = 0; j < ue; ++j) zpow[j] = f.pow(z, j);
  const Elem inv_e = f.inv(f.from_signed(e));

  std::vector<const std::vector<ClassIndex>*> power_maps(ue);
  for (std::size_t l = 0; l < ue; ++l) power_maps[l] = &g.power_map(static_cast<std::int64_t>(l));

  struct Row {
    std::int64_t degree;
    std::vector<std::vector<std::int64_t>> mult;
    std::vector<Cyclotomic> values;
    std::vector<std::string> printed;
    bool trivial;
  };
  std::vector<Row> rows;
  rows.reserve(r);

  for (const Vec& omega : basis) {
    // chi(1)^2 = |G| / sum_i omega_i omega_{i'} / |K_i|
    Elem s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const Elem term = f.mul(f.mul(omega[i], omega[g.inverse_class(i)]),
                              f.inv(f.from_signed(cls.class_sizes[i])));
      s = f.add(s, term);
    }
    if (s == 0) throw LiftInconsistency("degree equation degenerates modulo " + std::to_string(p));
    const Elem deg_sq = f.mul(f.from_signed(g.order()), f.inv(s));
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d * d <= g.order(); ++d) {
      if (f.from_signed(d * d) == deg_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw LiftInconsistency("no admissible degree modulo " + std::to_string(p));

    Vec theta(r);
    for (std::size_t i = 0; i < r; ++i)
      theta[i] = f.mul(f.mul(f.from_signed(degree), omega[i]), f.inv(f.from_signed(cls.class_sizes[i])));

    Row row;
    row.degree = degree;
    row.mult.assign(r, std::vector<std::int64_t>(ue, 0));
    for (std::size_t c = 0; c < r; ++c) {
      std::int64_t total = 0;
      for (std::size_t k = 0; k < ue; ++k) {
        Elem acc = 0;
        for (std::size_t l = 0; l < ue; ++l) {
          const Elem t = theta[(*power_maps[l])[c]];
          if (t == 0) continue;
          acc = f.add(acc, f.mul(t, zpow[(ue - (k * l) % ue) % ue]));
        }
        acc = f.mul(acc, inv_e);
        if (acc > static_cast<Elem>(degree))
          throw LiftInconsistency("eigenvalue multiplicity is not a small integer modulo " +
                                  std::to_string(p));
        row.mult[c][k] = static_cast<std::int64_t>(acc);
        total += row.mult[c][k];
      }
      if (total != degree) throw LiftInconsistency("eigenvalue multiplicities do not sum to the degree");
      row.values.push_back(Cyclotomic::from_exponents(e, row.mult[c]));
      row.printed.push_back(row.values.back().to_string());
    }
    row.trivial = std::all_of(row.printed.begin(), row.printed.end(),
                              [](const std::string& s) { return s == "1"; });
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.trivial != b.trivial) return a.trivial;
    return a.printed < b.printed;
  });

  CharacterTable t;
  t.group_ = group;
  t.prime_ = p;
  t.ambient_order_ = e;
  for (auto& row : rows) {
    t.degrees_.push_back(row.degree);
    t.multiplicities_.push_back(std::move(row.mult));
    t.rows_.push_back(ClassFunction{group, std::move(row.values)});
  }

  std::int64_t sum_sq = 0;
  for (auto d : t.degrees_) sum_sq += d * d;
  if (sum_sq != g.order()) throw LiftInconsistency("squared degrees do not sum to |G|");
  if (!rows_orthonormal(t)) throw LiftInconsistency("row orthogonality fails");
  if (!columns_orthogonal(t)) throw LiftInconsistency("column orthogonality fails");
  return t;
}

CharacterTable CharacterTable::compute(GroupPtr group) { return compute_with_prime_rank(std::move(group), 0); }

CharacterTable CharacterTable::compute_with_prime_rank(GroupPtr group, std::size_t prime_rank) {
  constexpr std::size_t kRetries = 3;
  const auto a = class_mult_coefficients(*group);
  std::string last_error;
  for (std::size_t attempt = 0; attempt <= kRetries; ++attempt) {
    const std::uint64_t p = dixon_prime(*group, prime_rank + attempt);
    try {
      return lift_table(group, modular_character_basis(*group, a, p), p);
    } catch (const SplitFailure& e) {
      last_error = e.what();
    } catch (const LiftInconsistency& e) {
      last_error = e.what();
    }
  }
  throw LiftInconsistency("character table computation failed for every tried prime: " + last_error);
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
  if (a.group_.get() != b.group_.get() || a.size() != b.size() || a.degrees_ != b.degrees_)
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.multiplicities_[i] != b.multiplicities_[i]) return false;
  return true;
}

Cyclotomic row_inner_product(const CharacterTable& t, std::size_t a, std::size_t b) {
  const auto& g = t.group();
  std::vector<std::int64_t> acc(static_cast<std::size_t>(t.ambient_order()), 0);
  for (ClassIndex c = 0; c < g.num_classes(); ++c)
    accumulate_product(t.eigenvalue_multiplicities(a, c), t.eigenvalue_multiplicities(b, c),
                       g.classes().class_sizes[c], acc);
  return Cyclotomic::from_exponents(t.ambient_order(), acc) * make_rational(1, g.order());
}

Cyclotomic column_inner_product(const CharacterTable& t, ClassIndex c1, ClassIndex c2) {
  std::vector<std::int64_t> acc(static_cast<std::size_t>(t.ambient_order()), 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    accumulate_product(t.eigenvalue_multiplicities(i, c1), t.eigenvalue_multiplicities(i, c2), 1, acc);
  return Cyclotomic::from_exponents(t.ambient_order(), acc);
}

bool rows_orthonormal(const CharacterTable& t) {
  const auto e = t.ambient_order();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a; b < t.size(); ++b)
      if (!(row_inner_product(t, a, b) == Cyclotomic::rational(a == b ? 1 : 0, e))) return false;
  return true;
}

bool columns_orthogonal(const CharacterTable& t) {
  const auto& g = t.group();
  const auto e = t.ambient_order();
  for (ClassIndex c1 = 0; c1 < g.num_classes(); ++c1)
    for (ClassIndex c2 = c1; c2 < g.num_classes(); ++c2) {
      const std::int64_t expect = c1 == c2 ? g.centralizer_order(c1) : 0;
      if (!(column_inner_product(t, c1, c2) == Cyclotomic::rational(make_rational(expect), e)))
        return false;
    }
  return true;
}

bool galois_consistent(const CharacterTable& t) {
  const auto& g = t.group();
  const std::int64_t e = t.ambient_order();
  const auto ue = static_cast<std::size_t>(e);
  const std::size_t r = g.num_classes();

  std::map<std::vector<std::vector<std::int64_t>>, std::size_t> row_of;
  auto row_data = [&](std::size_t i) {
    std::vector<std::vector<std::int64_t>> data(r);
    for (ClassIndex c = 0; c < r; ++c) {
      auto m = t.eigenvalue_multiplicities(i, c);
      data[c].assign(m.begin(), m.end());
    }
    return data;
  };
  for (std::size_t i = 0; i < t.size(); ++i) row_of.emplace(row_data(i), i);

  for (std::int64_t k = 1; k <= e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    const auto& pm = g.power_map(k);
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::vector<std::vector<std::int64_t>> image(r, std::vector<std::int64_t>(ue, 0));
      for (ClassIndex c = 0; c < r; ++c) {
        auto m = t.eigenvalue_multiplicities(i, c);
        for (std::size_t j = 0; j < ue; ++j)
          image[c][(j * static_cast<std::size_t>(k)) % ue] += m[j];
        auto powered = t.eigenvalue_multiplicities(i, pm[c]);
        if (!std::equal(powered.begin(), powered.end(), image[c].begin())) return false;
      }
      if (!row_of.contains(image)) return false;
    }
  }
  return true;
}

}  // namespace xichar
