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

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "xichar/artin.hpp"
#include "xichar/character_table.hpp"
#include "xichar/errors.hpp"
#include "xichar/hnf.hpp"

namespace xichar {
namespace {

using testing::group;

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-6, 6);
  IntMatrix a(rows, std::vector<BigInt>(cols));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Exact determinant by fraction-free Bareiss elimination.
BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(m[swap][k]) == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

TEST(Hnf, FormIsEchelonAndUnimodular) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + trial % 4, cols = 2 + (trial / 4) % 4;
    const IntMatrix a = random_matrix(rows, cols, rng);
    const auto hf = column_hermite_form(a);
    EXPECT_EQ(multiply(a, hf.u), hf.h);
    EXPECT_EQ(abs(determinant(hf.u)), 1);
    std::size_t last_row = 0;
    for (std::size_t k = 0; k < hf.pivots.size(); ++k) {
      const auto [r, c] = hf.pivots[k];
      EXPECT_EQ(c, k);
      if (k > 0) {
        EXPECT_GT(r, last_row);
      }
      last_row = r;
      EXPECT_GT(hf.h[r][c], 0);
      for (std::size_t j = c + 1; j < cols; ++j) EXPECT_EQ(hf.h[r][j], 0);
      for (std::size_t j = 0; j < c; ++j) {
        EXPECT_GE(hf.h[r][j], 0);
        EXPECT_LT(hf.h[r][j], hf.h[r][c]);
      }
      for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(hf.h[i][c], 0);
    }
    for (std::size_t j = hf.rank(); j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) EXPECT_EQ(hf.h[i][j], 0);
  }
}

TEST(Hnf, SolvesConsistentSystems) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix a = random_matrix(4, 3 + trial % 3, rng);
    const IntMatrix x0 = random_matrix(a[0].size(), 1, rng);
    const IntMatrix b = multiply(a, x0);
    std::vector<BigInt> rhs;
    for (const auto& row : b) rhs.push_back(row[0]);
    const auto x = solve_integer_system(a, rhs);
    ASSERT_TRUE(x);
    IntMatrix col(x->size(), std::vector<BigInt>(1));
    for (std::size_t i = 0; i < x->size(); ++i) col[i][0] = (*x)[i];
    EXPECT_EQ(multiply(a, col), b);
  }
}

TEST(Hnf, DetectsNoIntegerSolution) {
  const IntMatrix a{{2, 0}, {0, 2}};
  EXPECT_FALSE(solve_integer_system(a, {1, 0}));
  const IntMatrix b{{1, 1}, {1, 1}};
  EXPECT_FALSE(solve_integer_system(b, {1, 2}));
  EXPECT_TRUE(solve_integer_system(b, {3, 3}));
}

TEST(Artin, InducedGoldenValues) {
  const auto s3 = group("S:3");
  const auto subs = s3->cyclic_subgroups_up_to_conjugacy();
  ASSERT_EQ(subs.size(), 3U);
  EXPECT_EQ(induce_trivial(*s3, subs[0]).values, (std::vector<std::int64_t>{6, 0, 0}));
  EXPECT_EQ(induce_trivial(*s3, subs[1]).values, (std::vector<std::int64_t>{3, 1, 0}));
  EXPECT_EQ(induce_trivial(*s3, subs[2]).values, (std::vector<std::int64_t>{2, 0, 2}));
  const auto c5 = group("C:5");
  const auto whole = c5->cyclic_subgroups_up_to_conjugacy().back();
  EXPECT_EQ(induce_trivial(*c5, whole).values, (std::vector<std::int64_t>(5, 1)));
}

TEST(Artin, GoldenCoefficients) {
  auto coeffs = [](const char* spec) {
    std::vector<long> out;
    for (const auto& c : artin_decompose_xi(*group(spec)).coefficients) out.push_back(c.get_si());
    return out;
  };
  EXPECT_EQ(coeffs("S:3"), (std::vector<long>{-8, 12, 9}));
  EXPECT_EQ(coeffs("C:2"), (std::vector<long>{-1, 4}));
  EXPECT_EQ(coeffs("C:1"), (std::vector<long>{1}));
}

TEST(Artin, RejectsUnreachableTargets) {
  // Induced characters from cyclic subgroups of C:2 span {(a, b) : a = b mod 2}.
  const auto c2 = group("C:2");
  EXPECT_THROW(artin_decompose(*c2, std::vector<std::int64_t>{1, 0}), NoIntegerSolution);
  EXPECT_NO_THROW(artin_decompose(*c2, std::vector<std::int64_t>{1, 1}));
}

class ArtinOracle : public ::testing::TestWithParam<const char*> {};

TEST_P(ArtinOracle, InducedValuesMatchCounting) {
  const auto g = group(GetParam());
  const oracle::RawGroup raw(*g);
  const auto t = CharacterTable::compute(g);
  for (const auto& c : g->cyclic_subgroups_up_to_conjugacy()) {
    const auto ind = induce_trivial(*g, c);
    const std::set<ElementIndex> members(c.members.begin(), c.members.end());
    for (ClassIndex k = 0; k < g->num_classes(); ++k)
      EXPECT_EQ(BigRational(ind.values[k]), oracle::induced_value(raw, members, g->classes().class_reps[k]));
    EXPECT_EQ(ind.values[0] * c.order(), g->order());
    // A permutation character has non-negative integer multiplicities.
    const auto f = ClassFunction::from_integers(g, ind.values, t.ambient_order());
    for (std::size_t r = 0; r < t.size(); ++r) {
      const BigInt m = as_integer(inner_product(f, t.row(r)));
      EXPECT_GE(m, 0);
    }
  }
}

TEST_P(ArtinOracle, DecompositionReevaluates) {
  const auto g = group(GetParam());
  const auto d = artin_decompose_xi(*g);
  for (ClassIndex k = 0; k < g->num_classes(); ++k) {
    BigInt sum = 0;
    for (std::size_t s = 0; s < d.induced.size(); ++s) sum += d.coefficients[s] * static_cast<long>(d.induced[s].values[k]);
    EXPECT_EQ(sum, g->order() * g->classes().rep_orders[k]);
    EXPECT_EQ(d.residual[k], 0);
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, ArtinOracle,
                         ::testing::Values("C:1", "C:6", "C:12", "D:4", "D:6", "S:4", "A:4", "A:5", "Q:8", "Q:16",
                                           "SL23", "C:2xC:2", "C:2xC:4", "C:4xC:4"));

}  // namespace
}  // namespace xichar
