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

#include <cstddef>
#include <cstdint>
#include <vector>

// Dense linear algebra over a prime field F_p with p < 2^32.
namespace xichar::modp {

using Elem = std::uint64_t;
using Vec = std::vector<Elem>;
using Mat = std::vector<Vec>;  // row-major

struct Field {
  Elem p;

  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem from_signed(std::int64_t a) const;
};

/// Reduces rows to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(Mat& rows, const Field& f);

/// Basis of { x : a x = 0 }, for a matrix with `cols` columns.
std::vector<Vec> nullspace(Mat a, std::size_t cols, const Field& f);

/// Characteristic polynomial det(xI - a), lowest degree first, via
/// reduction to upper Hessenberg form.
Vec charpoly(Mat a, const Field& f);

Elem poly_eval(const Vec& poly, Elem x, const Field& f);

Elem determinant(Mat a, const Field& f);

/// a * v
Vec mat_vec(const Mat& a, const Vec& v, const Field& f);

}  // namespace xichar::modp
