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
#include <utility>
#include <vector>

namespace xichar {

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> prime_divisors(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

bool is_prime(std::int64_t n);

/// Moebius function mu(n) for n >= 1.
int mobius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Exponent of p in n.
int p_valuation(std::int64_t n, std::int64_t p);

/// Largest power of p dividing n.
std::int64_t p_part(std::int64_t n, std::int64_t p);

/// n with every factor p removed.
std::int64_t p_prime_part(std::int64_t n, std::int64_t p);

std::int64_t ipow(std::int64_t base, int exp);

/// Non-negative residue of a mod n.
std::int64_t mod_floor(std::int64_t a, std::int64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse modulo a prime.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

/// Least generator of the multiplicative group of the prime field F_p.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace xichar
