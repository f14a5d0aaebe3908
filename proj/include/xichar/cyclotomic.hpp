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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace xichar {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
BigRational make_rational(std::int64_t num, std::int64_t den = 1);

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Memoized; safe to call from several threads.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n);

/// An exact element of Q(zeta_n).
///
/// Stored in the power basis 1, z, ..., z^(phi(n)-1) with z = zeta_n, fully
/// reduced modulo the n-th cyclotomic polynomial, so two elements of the
/// same order are equal exactly when their coefficient vectors are.
/// Binary operations require equal orders; use embed() to move values into
/// a common field first.
class Cyclotomic {
 public:
  /// Zero in Q(zeta_1) = Q.
  Cyclotomic();
  /// Zero in Q(zeta_n).
  explicit Cyclotomic(std::int64_t n);

  static Cyclotomic rational(const BigRational& q, std::int64_t n = 1);
  static Cyclotomic root_of_unity(std::int64_t n, std::int64_t k);
  /// sum_j counts[j] * zeta_n^j for j in [0, counts.size()); exponents wrap mod n.
  static Cyclotomic from_exponents(std::int64_t n, std::span<const std::int64_t> counts);
  static Cyclotomic from_exponents(std::int64_t n, std::span<const BigInt> counts);

  std::int64_t order() const noexcept { return order_; }
  std::span<const BigRational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRationalInteger if the value is not rational.
  BigRational rational_value() const;

  /// The same number inside Q(zeta_N); N must be a multiple of order().
  Cyclotomic embed(std::int64_t big_order) const;

  /// The automorphism zeta_n -> zeta_n^k; throws NotCoprime unless gcd(k,n)=1.
  Cyclotomic galois(std::int64_t k) const;
  /// Complex conjugate, galois(-1).
  Cyclotomic conj() const { return galois(-1); }
  Cyclotomic pow(std::int64_t e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const BigRational& q);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const BigRational& q) { return a *= q; }
  friend Cyclotomic operator*(const BigRational& q, Cyclotomic a) { return a *= q; }

  /// Throws OrderMismatch if the orders differ.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order (by order, then coefficients); used for keyed containers.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  /// "c0 + c1*z + c2*z^2 + ..." with zero terms omitted; "0" for zero.
  std::string to_string() const;

 private:
  Cyclotomic(std::int64_t n, std::vector<BigRational> coeffs);
  void check_same_order(const Cyclotomic& rhs) const;

  std::int64_t order_;
  std::vector<BigRational> coeffs_;
};

inline Cyclotomic root_of_unity(std::int64_t n, std::int64_t k) {
  return Cyclotomic::root_of_unity(n, k);
}

inline Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t k) { return x.galois(k); }

/// The distinct Galois conjugates of x inside its ambient field, in order of
/// first appearance for k = 1, 2, ... coprime to the order.
std::vector<Cyclotomic> distinct_conjugates(const Cyclotomic& x);

/// Trace from Q(alpha) down to Q: the sum of the distinct conjugates of
/// alpha. This is not the trace from the ambient Q(zeta_n), which would
/// count each conjugate [Q(zeta_n):Q(alpha)] times.
BigRational trace_over_q(const Cyclotomic& alpha);

struct GaloisOrbits {
  /// One representative per orbit, the first value of the orbit in input order.
  std::vector<Cyclotomic> reps;
  /// Input index each representative was taken from.
  std::vector<std::size_t> rep_source;
  /// Orbit (index into reps) of every input value.
  std::vector<std::size_t> orbit_of;
};

/// Partitions values into orbits under Gal(Q(zeta_n)/Q). All values must
/// share one order; repeated values land in the same orbit.
GaloisOrbits galois_orbit_representatives(std::span<const Cyclotomic> values);

/// Throws NotRationalInteger unless x is a rational integer.
BigInt as_integer(const Cyclotomic& x);

/// Narrowing helper for values known to fit.
std::int64_t to_int64(const BigInt& z);

}  // namespace xichar
