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

#include "xichar/hnf.hpp"

#include "xichar/errors.hpp"

namespace xichar {

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

// column dst -= q * column src
void axpy_column(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

void negate_column(IntMatrix& m, std::size_t c) {
  for (auto& row : m) row[c] = -row[c];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ColumnHermiteForm column_hermite_form(const IntMatrix& a) {
  ColumnHermiteForm out;
  out.h = a;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  out.u.assign(cols, std::vector<BigInt>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.u[i][i] = 1;

  IntMatrix& h = out.h;
  std::size_t col = 0;
  for (std::size_t i = 0; i < rows && col < cols; ++i) {
    // Euclid across columns col.. until a single nonzero entry remains.
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = col; j < cols; ++j) {
        if (sgn(h[i][j]) == 0) continue;
        if (best == cols || abs(h[i][j]) < abs(h[i][best])) best = j;
      }
      if (best == cols) break;
      swap_columns(h, col, best);
      swap_columns(out.u, col, best);
      bool done = true;
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (sgn(h[i][j]) == 0) continue;
        const BigInt q = floor_div(h[i][j], h[i][col]);
        axpy_column(h, j, col, q);
        axpy_column(out.u, j, col, q);
        if (sgn(h[i][j]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h[i][col]) == 0) continue;
    if (sgn(h[i][col]) < 0) {
      negate_column(h, col);
      negate_column(out.u, col);
    }
    for (std::size_t j = 0; j < col; ++j) {
      const BigInt q = floor_div(h[i][j], h[i][col]);
      if (sgn(q) == 0) continue;
      axpy_column(h, j, col, q);
      axpy_column(out.u, j, col, q);
    }
    out.pivots.emplace_back(i, col);
    ++col;
  }
  return out;
}

std::optional<std::vector<BigInt>> solve_integer_system(const IntMatrix& a, const std::vector<BigInt>& b) {
  if (a.size() != b.size()) throw InputError("right-hand side length does not match the matrix");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const ColumnHermiteForm hf = column_hermite_form(a);

  std::vector<BigInt> y(cols, 0);
  std::size_t next_pivot = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt residual = b[i];
    for (std::size_t j = 0; j < next_pivot; ++j) residual -= hf.h[i][j] * y[j];
    if (next_pivot < hf.pivots.size() && hf.pivots[next_pivot].first == i) {
      const BigInt& piv = hf.h[i][next_pivot];
      if (!mpz_divisible_p(residual.get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
      y[next_pivot] = residual / piv;
      ++next_pivot;
    } else if (sgn(residual) != 0) {
      return std::nullopt;
    }
  }

  std::vector<BigInt> x(cols, 0);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t c = 0; c < cols; ++c) x[r] += hf.u[r][c] * y[c];
  return x;
}

}  // namespace xichar
