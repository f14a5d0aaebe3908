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

#include "xichar/modp.hpp"

#include <cassert>
#include <utility>

#include "xichar/number_theory.hpp"

namespace xichar::modp {

Elem Field::inv(Elem a) const { return invmod(a, p); }

Elem Field::pow(Elem a, std::uint64_t e) const { return powmod(a, e, p); }

Elem Field::from_signed(std::int64_t a) const {
  return static_cast<Elem>(mod_floor(a, static_cast<std::int64_t>(p)));
}

std::vector<std::size_t> rref(Mat& rows, const Field& f) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Elem s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem u = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(u, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<Vec> nullspace(Mat a, std::size_t cols, const Field& f) {
  const auto pivots = rref(a, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(a[i][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

Vec charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    const Elem inv = f.inv(h[c + 1][c]);
    for (std::size_t j = c + 2; j < n; ++j) {
      if (h[j][c] == 0) continue;
      const Elem u = f.mul(h[j][c], inv);
      for (std::size_t k = 0; k < n; ++k) h[j][k] = f.sub(h[j][k], f.mul(u, h[c + 1][k]));
      for (std::size_t k = 0; k < n; ++k) h[k][c + 1] = f.add(h[k][c + 1], f.mul(u, h[k][j]));
    }
  }

  // p_m = (x - h[m-1][m-1]) p_{m-1}
  //       - sum_{i=1}^{m-1} h[i-1][m-1] * (prod_{j=i}^{m-1} h[j][j-1]) * p_{i-1}
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = p[m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = f.add(next[k + 1], prev[k]);
      next[k] = f.sub(next[k], f.mul(h[m - 1][m - 1], prev[k]));
    }
    Elem prod = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, h[i][i - 1]);
      const Elem coef = f.mul(h[i - 1][m - 1], prod);
      if (coef != 0) {
        for (std::size_t k = 0; k < p[i - 1].size(); ++k)
          next[k] = f.sub(next[k], f.mul(coef, p[i - 1][k]));
      }
    }
    p[m] = std::move(next);
  }
  return p[n];
}

Elem poly_eval(const Vec& poly, Elem x, const Field& f) {
  Elem acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

Elem determinant(Mat a, const Field& f) {
  const std::size_t n = a.size();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = f.neg(det);
    }
    det = f.mul(det, a[c][c]);
    const Elem inv = f.inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Elem u = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < n; ++j) a[i][j] = f.sub(a[i][j], f.mul(u, a[c][j]));
    }
  }
  return det;
}

Vec mat_vec(const Mat& a, const Vec& v, const Field& f) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) acc = (acc + a[i][j] * v[j]) % f.p;
    out[i] = acc;
  }
  return out;
}

}  // namespace xichar::modp
