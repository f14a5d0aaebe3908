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

#include "xichar/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"

namespace xichar {

namespace {

std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::int64_t, std::vector<BigInt>>& phi_memo() {
  static std::map<std::int64_t, std::vector<BigInt>> memo;
  return memo;
}

// Caller holds the memo lock.
const std::vector<BigInt>& cyclotomic_polynomial_locked(std::int64_t n) {
  auto& memo = phi_memo();
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact division.
  std::vector<BigInt> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    const auto& den = cyclotomic_polynomial_locked(d);
    const std::size_t dd = den.size() - 1;
    const std::size_t nd = num.size() - 1;
    std::vector<BigInt> quot(nd - dd + 1, 0);
    for (std::size_t i = nd + 1; i-- > dd;) {
      const BigInt c = num[i];  // den is monic
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return memo.emplace(n, std::move(num)).first->second;
}

// Reduces an integer polynomial modulo Phi_n in place; returns phi(n) coefficients.
template <typename T>
std::vector<T> reduce_mod_phi(std::int64_t n, std::vector<T> poly) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    const T c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, T(0));
  return poly;
}

constexpr std::int64_t kTableLimit = 1024;

// Row j holds the reduction of x^j modulo Phi_n, for j < n. Only built for
// n <= kTableLimit; returns nullptr if an entry does not fit in 64 bits.
const std::vector<std::vector<std::int64_t>>* reduction_table(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::optional<std::vector<std::vector<std::int64_t>>>> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find(n);
  if (it == memo.end()) {
    const auto& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    std::vector<std::vector<std::int64_t>> table;
    std::vector<BigInt> cur(deg, 0);
    cur[0] = 1;
    bool fits = true;
    for (std::int64_t j = 0; j < n && fits; ++j) {
      std::vector<std::int64_t> row(deg);
      for (std::size_t i = 0; i < deg; ++i) {
        if (!cur[i].fits_slong_p()) fits = false;
        row[i] = cur[i].get_si();
      }
      table.push_back(std::move(row));
      // multiply by x and reduce
      BigInt top = cur[deg - 1];
      for (std::size_t i = deg; i-- > 1;) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * phi[i];
    }
    std::optional<std::vector<std::vector<std::int64_t>>> entry;
    if (fits) entry = std::move(table);
    it = memo.emplace(n, std::move(entry)).first;
  }
  return it->second ? &*it->second : nullptr;
}

}  // namespace

BigRational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  BigRational q{BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw InputError("cyclotomic polynomial index must be positive");
  std::lock_guard lock(phi_mutex());
  return cyclotomic_polynomial_locked(n);
}

Cyclotomic::Cyclotomic() : Cyclotomic(1) {}

Cyclotomic::Cyclotomic(std::int64_t n) : order_(n) {
  if (n < 1) throw InputError("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(n)), BigRational(0));
}

Cyclotomic::Cyclotomic(std::int64_t n, std::vector<BigRational> coeffs)
    : order_(n), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::rational(const BigRational& q, std::int64_t n) {
  Cyclotomic x(n);
  x.coeffs_[0] = q;
  x.coeffs_[0].canonicalize();
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t n, std::int64_t k) {
  if (n < 1) throw InputError("root of unity order must be positive");
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  counts[static_cast<std::size_t>(mod_floor(k, n))] = 1;
  return from_exponents(n, counts);
}

Cyclotomic Cyclotomic::from_exponents(std::int64_t n, std::span<const std::int64_t> counts) {
  if (n < 1) throw InputError("cyclotomic order must be positive");
  if (n <= kTableLimit) {
    if (const auto* table = reduction_table(n)) {
      const std::size_t deg = (*table)[0].size();
      std::vector<std::int64_t> acc(deg, 0);
      bool overflow = false;
      for (std::size_t j = 0; j < counts.size() && !overflow; ++j) {
        const std::int64_t c = counts[j];
        if (c == 0) continue;
        const auto& row = (*table)[j % static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < deg; ++i) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(c, row[i], &prod) ||
              __builtin_add_overflow(acc[i], prod, &acc[i])) {
            overflow = true;
            break;
          }
        }
      }
      if (!overflow) {
        std::vector<BigRational> coeffs(deg);
        for (std::size_t i = 0; i < deg; ++i) coeffs[i] = make_rational(acc[i]);
        return Cyclotomic(n, std::move(coeffs));
      }
    }
  }
  std::vector<BigInt> big(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < counts.size(); ++j)
    if (counts[j] != 0) big[j % static_cast<std::size_t>(n)] += static_cast<long>(counts[j]);
  return from_exponents(n, big);
}

Cyclotomic Cyclotomic::from_exponents(std::int64_t n, std::span<const BigInt> counts) {
  if (n < 1) throw InputError("cyclotomic order must be positive");
  std::vector<BigInt> folded(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < counts.size(); ++j) folded[j % static_cast<std::size_t>(n)] += counts[j];
  auto reduced = reduce_mod_phi(n, std::move(folded));
  std::vector<BigRational> coeffs(reduced.size());
  for (std::size_t i = 0; i < reduced.size(); ++i) coeffs[i] = BigRational(reduced[i]);
  return Cyclotomic(n, std::move(coeffs));
}

bool Cyclotomic::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return sgn(c) == 0; });
}

bool Cyclotomic::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const BigRational& c) { return sgn(c) == 0; });
}

BigRational Cyclotomic::rational_value() const {
  if (!is_rational()) throw NotRationalInteger(to_string() + " is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(std::int64_t big_order) const {
  if (big_order < 1 || big_order % order_ != 0)
    throw OrderMismatch("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                        std::to_string(big_order) + ")");
  if (big_order == order_) return *this;
  const std::int64_t step = big_order / order_;
  std::vector<BigRational> full(static_cast<std::size_t>(big_order), BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) full[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return Cyclotomic(big_order, reduce_mod_phi(big_order, std::move(full)));
}

Cyclotomic Cyclotomic::galois(std::int64_t k) const {
  if (std::gcd(k, order_) != 1)
    throw NotCoprime("Galois exponent " + std::to_string(k) + " is not coprime to " +
                     std::to_string(order_));
  if (is_rational()) return *this;
  const std::int64_t kk = mod_floor(k, order_);
  std::vector<BigRational> full(static_cast<std::size_t>(order_), BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    full[static_cast<std::size_t>((static_cast<std::int64_t>(i) * kk) % order_)] += coeffs_[i];
  }
  return Cyclotomic(order_, reduce_mod_phi(order_, std::move(full)));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) throw InputError("negative powers are not supported");
  Cyclotomic result = rational(1, order_);
  Cyclotomic base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

void Cyclotomic::check_same_order(const Cyclotomic& rhs) const {
  if (order_ != rhs.order_)
    throw OrderMismatch("cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                        std::to_string(rhs.order_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  check_same_order(rhs);
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    const BigRational q = coeffs_[0];
    *this = rhs;
    return *this *= q;
  }
  std::vector<BigRational> prod(2 * coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = reduce_mod_phi(order_, std::move(prod));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const BigRational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_order(b);
  return a.coeffs_ == b.coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) return a.order_ < b.order_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigRational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const BigRational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

std::vector<Cyclotomic> distinct_conjugates(const Cyclotomic& x) {
  if (x.is_rational()) return {x};
  std::set<Cyclotomic> seen;
  std::vector<Cyclotomic> out;
  const std::int64_t n = x.order();
  for (std::int64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) != 1) continue;
    Cyclotomic y = x.galois(k);
    if (seen.insert(y).second) out.push_back(std::move(y));
  }
  return out;
}

BigRational trace_over_q(const Cyclotomic& alpha) {
  Cyclotomic sum(alpha.order());
  for (const auto& y : distinct_conjugates(alpha)) sum += y;
  // A Galois-stable sum is rational; anything else is an arithmetic bug.
  return sum.rational_value();
}

GaloisOrbits galois_orbit_representatives(std::span<const Cyclotomic> values) {
  GaloisOrbits out;
  out.orbit_of.resize(values.size());
  std::map<Cyclotomic, std::size_t> assigned;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i].order() != values[0].order())
      throw OrderMismatch("Galois orbit computation needs values of a common order");
    if (auto it = assigned.find(values[i]); it != assigned.end()) {
      out.orbit_of[i] = it->second;
      continue;
    }
    const std::size_t r = out.reps.size();
    out.reps.push_back(values[i]);
    out.rep_source.push_back(i);
    out.orbit_of[i] = r;
    for (auto& y : distinct_conjugates(values[i])) assigned.emplace(std::move(y), r);
  }
  return out;
}

BigInt as_integer(const Cyclotomic& x) {
  if (!x.is_rational() || x.coefficients()[0].get_den() != 1)
    throw NotRationalInteger(x.to_string() + " is not a rational integer");
  return x.coefficients()[0].get_num();
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw InternalError("integer " + z.get_str() + " does not fit in 64 bits");
  return z.get_si();
}

}  // namespace xichar
