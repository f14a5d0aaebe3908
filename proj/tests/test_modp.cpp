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
#include "xichar/modp.hpp"

namespace xichar::modp {
namespace {

Mat random_matrix(std::size_t n, Elem p, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, p - 1);
  Mat a(n, Vec(n));
  for (auto& row : a)
    for (auto& x : row) x = d(rng);
  return a;
}

TEST(Modp, FieldInverse) {
  const Field f{13};
  for (Elem a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1U);
  EXPECT_EQ(f.from_signed(-1), 12U);
  EXPECT_EQ(f.pow(2, 12), 1U);
}

TEST(Modp, CharpolyMatchesCofactorDeterminant) {
  std::mt19937_64 rng(42);
  for (Elem p : {7ULL, 13ULL, 31ULL}) {
    const Field f{p};
    for (std::size_t n = 1; n <= 5; ++n) {
      const Mat a = random_matrix(n, p, rng);
      const Vec cp = charpoly(a, f);
      ASSERT_EQ(cp.size(), n + 1);
      EXPECT_EQ(cp[n], 1U);
      for (Elem x = 0; x < p; ++x) {
        Mat m(n, Vec(n));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) m[i][j] = f.sub(i == j ? x : 0, a[i][j]);
        EXPECT_EQ(poly_eval(cp, x, f), oracle::determinant(m, p));
      }
      EXPECT_EQ(determinant(a, f), oracle::determinant(a, p));
    }
  }
}

TEST(Modp, NullspaceVectorsAreKilled) {
  std::mt19937_64 rng(3);
  const Field f{101};
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = random_matrix(4, 101, rng);
    a[3] = a[0];  // force a nontrivial kernel
    for (std::size_t j = 0; j < 4; ++j) a[2][j] = f.add(a[1][j], a[0][j]);
    const auto basis = nullspace(a, 4, f);
    EXPECT_GE(basis.size(), 2U);
    for (const auto& v : basis)
      for (Elem x : mat_vec(a, v, f)) EXPECT_EQ(x, 0U);
  }
}

TEST(Modp, RrefDropsZeroRows) {
  const Field f{5};
  Mat m{{1, 2, 3}, {2, 4, 1}, {0, 1, 1}};  // row 2 is twice row 1
  const auto pivots = rref(m, f);
  EXPECT_EQ(pivots.size(), m.size());
  EXPECT_EQ(pivots.size(), 2U);
}

}  // namespace
}  // namespace xichar::modp
