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


#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "test_util.hpp"
#include "xichar/character_table.hpp"
#include "xichar/class_function.hpp"
#include "xichar/number_theory.hpp"

namespace xichar {
namespace {

using testing::group;

// Tolerance for the floating-point oracle only.
constexpr double kComplexTolerance = 1e-8;

std::vector<std::string> row_strings(const CharacterTable& t, std::size_t r) {
  std::vector<std::string> out;
  for (const auto& v : t.row(r).values) out.push_back(v.to_string());
  return out;
}

TEST(CharacterTable, S3) {
  const auto t = CharacterTable::compute(group("S:3"));
  ASSERT_EQ(t.size(), 3U);
  EXPECT_EQ(row_strings(t, 0), (std::vector<std::string>{"1", "1", "1"}));
  EXPECT_EQ(row_strings(t, 1), (std::vector<std::string>{"1", "-1", "1"}));
  EXPECT_EQ(row_strings(t, 2), (std::vector<std::string>{"2", "0", "-1"}));
  EXPECT_EQ(t.prime(), 7U);
}

TEST(CharacterTable, C2AndTrivial) {
  const auto c2 = CharacterTable::compute(group("C:2"));
  EXPECT_EQ(c2.prime(), 3U);
  EXPECT_EQ(row_strings(c2, 1), (std::vector<std::string>{"1", "-1"}));
  const auto c1 = CharacterTable::compute(group("C:1"));
  EXPECT_EQ(c1.prime(), 2U);
  EXPECT_EQ(c1.size(), 1U);
  EXPECT_EQ(row_strings(c1, 0), (std::vector<std::string>{"1"}));
}

TEST(CharacterTable, DixonPrimeRule) {
  for (const char* spec : {"C:1", "C:2", "S:3", "Q:8", "A:5", "D:7", "C:3xC:5"}) {
    const auto g = group(spec);
    const std::uint64_t p = dixon_prime(*g);
    if (g->order() == 1) {
      EXPECT_EQ(p, 2U);
      continue;
    }
    EXPECT_TRUE(is_prime(static_cast<std::int64_t>(p)));
    EXPECT_EQ(p % g->exponent(), 1U % g->exponent());
    EXPECT_GT(p * p, 4U * static_cast<std::uint64_t>(g->order()));
    for (std::uint64_t q = 2; q < p; ++q)
      EXPECT_FALSE(is_prime(static_cast<std::int64_t>(q)) && q % g->exponent() == 1 % g->exponent() &&
                   q * q > 4U * static_cast<std::uint64_t>(g->order()))
          << spec << " q=" << q;
    EXPECT_GT(dixon_prime(*g, 1), p);
  }
}

TEST(CharacterTable, StructureConstantsMatchCounting) {
  const auto g = group("S:4");
  const auto a = class_mult_coefficients(*g);
  const oracle::RawGroup raw(*g);
  const auto& cls = g->classes();
  for (ClassIndex i = 0; i < cls.size(); ++i)
    for (ClassIndex j = 0; j < cls.size(); ++j)
      for (ClassIndex k = 0; k < cls.size(); ++k) {
        std::int64_t count = 0;
        for (ElementIndex x = 0; x < raw.size(); ++x) {
          if (g->class_of(x) != i) continue;
          const ElementIndex y = raw.mul(raw.inv(x), cls.class_reps[k]);
          count += g->class_of(y) == j;
        }
        EXPECT_EQ(a(i, j, k), count) << i << j << k;
      }
}

class TableOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(TableOracle, NumericOrthogonality) {
  const auto g = group(GetParam());
  const auto t = CharacterTable::compute(g);
  EXPECT_EQ(t.size(), g->num_classes());
  std::int64_t sum_sq = 0;
  for (std::size_t r = 0; r < t.size(); ++r) sum_sq += t.degree(r) * t.degree(r);
  EXPECT_EQ(sum_sq, g->order());
  const auto& sizes = g->classes().class_sizes;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      oracle::Complex s = 0;
      for (ClassIndex c = 0; c < sizes.size(); ++c)
        s += static_cast<double>(sizes[c]) * oracle::to_complex(t.row(a)[c]) *
             std::conj(oracle::to_complex(t.row(b)[c]));
      s /= static_cast<double>(g->order());
      EXPECT_NEAR(std::abs(s - oracle::Complex(a == b ? 1.0 : 0.0)), 0.0, kComplexTolerance);
    }
}

TEST_P(TableOracle, ExactChecksAndGalois) {
  const auto t = CharacterTable::compute(group(GetParam()));
  EXPECT_TRUE(rows_orthonormal(t));
  EXPECT_TRUE(columns_orthogonal(t));
  EXPECT_TRUE(galois_consistent(t));
  for (std::size_t a = 0; a < t.size(); ++a)
    EXPECT_EQ(inner_product(t.row(a), t.row(a)), Cyclotomic::rational(1, t.ambient_order()));
}

TEST_P(TableOracle, EigenvalueMultiplicitiesGiveValues) {
  const auto t = CharacterTable::compute(group(GetParam()));
  const std::int64_t e = t.ambient_order();
  for (std::size_t r = 0; r < t.size(); ++r)
    for (ClassIndex c = 0; c < t.group().num_classes(); ++c) {
      const auto m = t.eigenvalue_multiplicities(r, c);
      ASSERT_EQ(static_cast<std::int64_t>(m.size()), e);
      EXPECT_EQ(std::accumulate(m.begin(), m.end(), std::int64_t{0}), t.degree(r));
      EXPECT_TRUE(std::all_of(m.begin(), m.end(), [](std::int64_t x) { return x >= 0; }));
      EXPECT_EQ(Cyclotomic::from_exponents(e, m), t.row(r)[c]);
    }
}

TEST_P(TableOracle, RowsAreCanonicallyOrdered) {
  const auto t = CharacterTable::compute(group(GetParam()));
  EXPECT_TRUE(std::is_sorted(t.degrees().begin(), t.degrees().end()));
  for (ClassIndex c = 0; c < t.group().num_classes(); ++c)
    EXPECT_EQ(t.row(0)[c], Cyclotomic::rational(1, t.ambient_order()));
}

TEST_P(TableOracle, NextPrimeGivesSameTable) {
  const auto g = group(GetParam());
  const auto t0 = CharacterTable::compute(g);
  const auto t1 = CharacterTable::compute_with_prime_rank(g, 1);
  EXPECT_NE(t0.prime(), t1.prime());
  EXPECT_TRUE(t0 == t1);
  for (std::size_t r = 0; r < t0.size(); ++r) EXPECT_EQ(row_strings(t0, r), row_strings(t1, r));
}

INSTANTIATE_TEST_SUITE_P(Catalog, TableOracle,
                         ::testing::Values("C:1", "C:2", "C:7", "C:12", "D:1", "D:2", "D:5", "D:8", "S:3", "S:4",
                                           "S:5", "A:4", "A:5", "Q:8", "Q:16", "SL23", "C:3xC:3", "C:2xC:6"));

}  // namespace
}  // namespace xichar
