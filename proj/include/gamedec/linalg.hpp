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

#ifndef GAMEDEC_LINALG_HPP_
#define GAMEDEC_LINALG_HPP_

#include <optional>
#include <vector>

#include "gamedec/matrix.hpp"

namespace gamedec {

struct RrefResult {
  RatMatrix m;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice
// is the first nonzero entry in the column; with exact arithmetic no other
// pivoting is needed, and the result is canonical.
RrefResult rref(RatMatrix m);

int rank(const RatMatrix& m);

// Columns span the kernel of m. Each column is scaled to a primitive integer
// vector (denominators cleared, content divided out), which keeps subspace
// bases integral.
RatMatrix null_space(const RatMatrix& m);

// Any exact solution of a x = b, or nullopt when inconsistent. Free
// variables are set to zero.
std::optional<std::vector<Rat>> solve_any(const RatMatrix& a,
                                          const std::vector<Rat>& b);

// a must be square and nonsingular; throws DomainError otherwise.
RatMatrix inverse(const RatMatrix& a);

// Solves a X = b for square nonsingular a.
RatMatrix solve_matrix(const RatMatrix& a, const RatMatrix& b);

// Solves a x = b for square nonsingular a.
std::vector<Rat> solve_vector(const RatMatrix& a, const std::vector<Rat>& b);

bool in_span(const RatMatrix& basis, const std::vector<Rat>& v);

// Indices of a maximal linearly independent subset of columns (the pivot
// columns of the RREF), in increasing order.
std::vector<int> independent_columns(const RatMatrix& m);

// The named columns themselves, entries untouched.
RatMatrix column_reduce(const RatMatrix& m);

}  // namespace gamedec

#endif  // GAMEDEC_LINALG_HPP_
