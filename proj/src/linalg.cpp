// Copyright 2026 The gamedec Authors. All rights reserved.
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

#include "gamedec/linalg.hpp"

#include <algorithm>

#include "gamedec/errors.hpp"
#include "gamedec/kernels.hpp"

namespace gamedec {

namespace {

// Scales a rational column to a primitive integer vector. The first nonzero
// entry keeps its sign.
void make_primitive(std::vector<Rat>& v) {
  mpz_class den_lcm = 1;
  for (const Rat& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  }
  mpz_class num_gcd = 0;
  std::vector<mpz_class> nums(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (num_gcd == 0) return;  // zero vector
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = Rat(nums[i] / num_gcd);
  }
}

}  // namespace

RrefResult rref(RatMatrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    m.swap_rows(p, r);
    Rat inv_pivot = 1 / m(r, c);
    m(r, c) = 1;
    for (int j = c + 1; j < m.cols(); ++j) m(r, j) *= inv_pivot;
    kernels::eliminate_column(m.data(), m.rows(), m.cols(), r, c);
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

int rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix null_space(const RatMatrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : red.pivot_cols) is_pivot[c] = true;

  int nullity = m.cols() - red.rank;
  RatMatrix basis(m.cols(), nullity);
  int out = 0;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (int r = 0; r < red.rank; ++r) {
      v[red.pivot_cols[r]] = -red.m(r, f);
    }
    make_primitive(v);
    basis.set_column(out++, v);
  }
  return basis;
}

std::optional<std::vector<Rat>> solve_any(const RatMatrix& a,
                                          const std::vector<Rat>& b) {
  if (a.rows() != static_cast<int>(b.size())) {
    throw DimensionError("solve: rhs size mismatch");
  }
  RatMatrix aug = RatMatrix::hstack(a, RatMatrix::column_vector(b));
  RrefResult red = rref(std::move(aug));
  // A pivot in the augmented column means the system is inconsistent.
  if (!red.pivot_cols.empty() && red.pivot_cols.back() == a.cols()) {
    return std::nullopt;
  }
  std::vector<Rat> x(a.cols(), Rat(0));
  for (int r = 0; r < red.rank; ++r) {
    x[red.pivot_cols[r]] = red.m(r, a.cols());
  }
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix not square");
  return solve_matrix(a, RatMatrix::identity(a.rows()));
}

RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != a.cols()) throw DimensionError("solve_matrix: matrix not square");
  if (a.rows() != b.rows()) throw DimensionError("solve_matrix: rhs mismatch");
  RatMatrix aug = RatMatrix::hstack(a, b);
  RrefResult red = rref(std::move(aug));
  // Invertible iff every pivot lands inside the A block; a singular A lets
  // pivots escape into the rhs columns while the overall rank stays full.
  if (red.rank < a.cols() ||
      (red.rank > 0 && red.pivot_cols[red.rank - 1] >= a.cols())) {
    throw DomainError("singular matrix");
  }
  RatMatrix x(a.cols(), b.cols());
  for (int i = 0; i < a.cols(); ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = red.m(i, a.cols() + j);
  return x;
}

std::vector<Rat> solve_vector(const RatMatrix& a, const std::vector<Rat>& b) {
  return solve_matrix(a, RatMatrix::column_vector(b)).column(0);
}

bool in_span(const RatMatrix& basis, const std::vector<Rat>& v) {
  if (basis.rows() != static_cast<int>(v.size())) {
    throw DimensionError("in_span: vector size mismatch");
  }
  return solve_any(basis, v).has_value();
}

std::vector<int> independent_columns(const RatMatrix& m) {
  return rref(m).pivot_cols;
}

RatMatrix column_reduce(const RatMatrix& m) {
  return select_columns(m, independent_columns(m));
}

}  // namespace gamedec
