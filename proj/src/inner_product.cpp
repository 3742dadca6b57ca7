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

#include "gamedec/inner_product.hpp"

#include <string>
#include <utility>

#include "gamedec/errors.hpp"
#include "gamedec/linalg.hpp"

namespace gamedec {

namespace {

// Exact symmetric elimination. The pivots are the diagonal factors of the
// LDL^T factorization, so Q is positive definite exactly when all of them
// stay positive. Reports the 1-based index of the first failing pivot.
void verify_spd(const RatMatrix& q) {
  const int n = q.rows();
  if (q.cols() != n) {
    throw DomainError("weight matrix must be square, got " +
                      std::to_string(q.rows()) + "x" + std::to_string(q.cols()));
  }
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      if (q(r, c) != q(c, r)) {
        throw DomainError("weight matrix is not symmetric at entry (" +
                          std::to_string(r + 1) + "," + std::to_string(c + 1) +
                          ")");
      }
    }
  }
  RatMatrix s = q;
  for (int j = 0; j < n; ++j) {
    if (s(j, j) <= 0) {
      throw DomainError("weight matrix is not positive definite (pivot " +
                        std::to_string(j + 1) + ")");
    }
    for (int r = j + 1; r < n; ++r) {
      if (s(r, j) == 0) continue;
      const Rat f = s(r, j) / s(j, j);
      for (int c = j; c < n; ++c) s(r, c) -= f * s(j, c);
    }
  }
}

}  // namespace

InnerProduct::InnerProduct(GameSpace space, RatMatrix q, std::string name)
    : space_(std::move(space)), q_(std::move(q)), name_(std::move(name)) {
  if (static_cast<long long>(q_.rows()) != space_.dim()) {
    throw DimensionError("weight matrix has " + std::to_string(q_.rows()) +
                         " rows, expected " + std::to_string(space_.dim()));
  }
  verify_spd(q_);
}

InnerProduct InnerProduct::standard(const GameSpace& space) {
  return InnerProduct(space,
                      RatMatrix::identity(static_cast<int>(space.dim())),
                      "standard");
}

InnerProduct InnerProduct::candogan(const GameSpace& space) {
  const int n = space.players();
  const int k = static_cast<int>(space.profiles());
  RatMatrix q(n * k, n * k);
  for (int p = 0; p < n; ++p) {
    for (int t = 0; t < k; ++t) {
      q(p * k + t, p * k + t) = space.strategy_count(p + 1);
    }
  }
  return InnerProduct(space, std::move(q), "candogan");
}

Rat inner(const InnerProduct& ip, const std::vector<Rat>& x,
          const std::vector<Rat>& y) {
  const int n = ip.q().rows();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
    throw DimensionError("inner product of vectors with mismatched lengths");
  }
  // x^T (Q y), exploiting row access on Q.
  Rat total = 0;
  for (int r = 0; r < n; ++r) {
    Rat row = 0;
    for (int c = 0; c < n; ++c) {
      if (ip.q()(r, c) != 0) row += ip.q()(r, c) * y[c];
    }
    total += x[r] * row;
  }
  return total;
}

Rat inner(const InnerProduct& ip, const Game& x, const Game& y) {
  if (x.space() != ip.space() || y.space() != ip.space()) {
    throw DimensionError("inner product across different spaces");
  }
  return inner(ip, x.v(), y.v());
}

RatMatrix projector(const InnerProduct& ip, const Subspace& s) {
  if (s.space() != ip.space()) {
    throw DimensionError("projector under a mismatched weight");
  }
  const int dim = static_cast<int>(ip.space().dim());
  if (s.dim() == 0) return RatMatrix(dim, dim);
  const RatMatrix& b = s.basis();
  const RatMatrix qb = ip.q() * b;
  const RatMatrix gram = b.transposed() * qb;
  try {
    // (Q B)^T = B^T Q because Q is symmetric.
    return b * solve_matrix(gram, qb.transposed());
  } catch (const DomainError&) {
    // A positive definite weight makes the Gram matrix of independent
    // columns invertible, so this cannot be reached by valid inputs.
    throw InternalError("singular Gram matrix in projector");
  }
}

Game project(const InnerProduct& ip, const Subspace& s, const Game& g) {
  if (s.space() != ip.space() || g.space() != ip.space()) {
    throw DimensionError("projection under a mismatched weight");
  }
  if (s.dim() == 0) return Game::zero(g.space());
  const RatMatrix& b = s.basis();
  const RatMatrix qb = ip.q() * b;
  const RatMatrix gram = b.transposed() * qb;
  const std::vector<Rat> rhs = qb.transposed() * g.v();
  try {
    return Game(g.space(), b * solve_vector(gram, rhs));
  } catch (const DomainError&) {
    throw InternalError("singular Gram matrix in projection");
  }
}

}  // namespace gamedec
