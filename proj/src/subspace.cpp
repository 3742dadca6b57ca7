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

#include "gamedec/subspace.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gamedec/errors.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/linalg.hpp"

namespace gamedec {

namespace {

// Dense constructions allocate matrices with space.dim() rows; beyond this
// they could not be stored, so fail early with a clear message.
constexpr long long kMaxDenseDim = 1LL << 20;

int checked_profiles(const GameSpace& space) {
  if (space.dim() > kMaxDenseDim) {
    throw DomainError("space too large for dense subspace construction: " +
                      space.signature());
  }
  return static_cast<int>(space.profiles());
}

// Row index of player p's payoff at 0-based profile index t.
int entry(const GameSpace& space, int p, int t) {
  return p * static_cast<int>(space.profiles()) + t;
}

// 0-based strategy of player p inside 0-based profile index t.
int digit(const GameSpace& space, int p, int t) {
  return (t / static_cast<int>(space.stride(p + 1))) %
         space.strategy_count(p + 1);
}

RatMatrix top_rows(const RatMatrix& m, int count) {
  RatMatrix out(count, m.cols());
  for (int r = 0; r < count; ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

Subspace::Subspace(GameSpace space, RatMatrix basis)
    : space_(std::move(space)), basis_(std::move(basis)) {
  if (static_cast<long long>(basis_.rows()) != space_.dim()) {
    throw DimensionError("subspace basis has " + std::to_string(basis_.rows()) +
                         " rows, expected " + std::to_string(space_.dim()));
  }
  if (rank(basis_) != basis_.cols()) {
    throw DomainError("subspace basis columns are linearly dependent");
  }
}

Subspace Subspace::zero_subspace(const GameSpace& space) {
  return Subspace(space, RatMatrix(space.players() * checked_profiles(space), 0));
}

Subspace Subspace::full_space(const GameSpace& space) {
  return Subspace(
      space, RatMatrix::identity(space.players() * checked_profiles(space)));
}

Subspace zero_sum_space(const GameSpace& space) {
  const int n = space.players();
  const int k = checked_profiles(space);
  // One constraint per profile: payoffs across players sum to zero.
  RatMatrix constraints(k, n * k);
  for (int t = 0; t < k; ++t)
    for (int p = 0; p < n; ++p) constraints(t, entry(space, p, t)) = 1;
  return Subspace(space, null_space(constraints));
}

Subspace common_interest_space(const GameSpace& space) {
  const int n = space.players();
  const int k = checked_profiles(space);
  // One basis vector per profile: every player gets 1 there, 0 elsewhere.
  RatMatrix basis(n * k, k);
  for (int t = 0; t < k; ++t)
    for (int p = 0; p < n; ++p) basis(entry(space, p, t), t) = 1;
  return Subspace(space, basis);
}

namespace {

// Appends, for every player p and every fixed opponent profile, one row
// marking player p's payoff entries as that player's strategy varies.
// These are the constraints of the normalized space and, transposed into
// columns, the basis of the non-strategic space.
RatMatrix own_strategy_lines(const GameSpace& space) {
  const int n = space.players();
  const int k = checked_profiles(space);
  int lines = 0;
  for (int p = 0; p < n; ++p) lines += k / space.strategy_count(p + 1);
  RatMatrix m(lines, n * k);
  int row = 0;
  for (int p = 0; p < n; ++p) {
    const int kp = space.strategy_count(p + 1);
    const int stride = static_cast<int>(space.stride(p + 1));
    for (int t = 0; t < k; ++t) {
      if (digit(space, p, t) != 0) continue;  // t is the x_p = 1 anchor
      for (int x = 0; x < kp; ++x)
        m(row, entry(space, p, t + x * stride)) = 1;
      ++row;
    }
  }
  return m;
}

}  // namespace

Subspace normalized_space(const GameSpace& space) {
  return Subspace(space, null_space(own_strategy_lines(space)));
}

Subspace non_strategic_space(const GameSpace& space) {
  return Subspace(space, own_strategy_lines(space).transposed());
}

Subspace harmonic_space(const GameSpace& space) {
  return intersect(zero_sum_space(space), normalized_space(space));
}

Subspace potential_space(const GameSpace& space) {
  const int n = space.players();
  const int k = checked_profiles(space);
  // Unknowns: the n*k payoff entries followed by k potential values.
  // For each player and each move along that player's own strategies, the
  // payoff difference must equal the potential difference.
  int rows = 0;
  for (int p = 0; p < n; ++p)
    rows += (space.strategy_count(p + 1) - 1) * (k / space.strategy_count(p + 1));
  RatMatrix system(rows, n * k + k);
  int row = 0;
  for (int p = 0; p < n; ++p) {
    const int kp = space.strategy_count(p + 1);
    const int stride = static_cast<int>(space.stride(p + 1));
    for (int t = 0; t < k; ++t) {
      if (digit(space, p, t) != 0) continue;
      for (int x = 0; x + 1 < kp; ++x) {
        const int lo = t + x * stride;
        const int hi = t + (x + 1) * stride;
        system(row, entry(space, p, hi)) = 1;
        system(row, entry(space, p, lo)) = -1;
        system(row, n * k + hi) = -1;
        system(row, n * k + lo) = 1;
        ++row;
      }
    }
  }
  const RatMatrix solutions = null_space(system);
  // Keep the payoff block and drop redundant columns.
  return Subspace(space, column_reduce(top_rows(solutions, n * k)));
}

RatMatrix player_permutation_matrix(const GameSpace& space,
                                    const std::vector<int>& sigma) {
  const int n = space.players();
  const int k = checked_profiles(space);
  if (static_cast<int>(sigma.size()) != n) {
    throw DimensionError("permutation length does not match player count");
  }
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sigma[i] < 0 || sigma[i] >= n || inverse[sigma[i]] != -1) {
      throw DomainError("player permutation is not a bijection");
    }
    inverse[sigma[i]] = i;
  }
  if (!space.equal_strategy_counts()) {
    throw DomainError(
        "player permutations require equal strategy counts, got " +
        space.signature());
  }
  RatMatrix m(n * k, n * k);
  std::vector<int> profile(n), moved(n);
  for (int t = 0; t < k; ++t) {
    for (int p = 0; p < n; ++p) profile[p] = digit(space, p, t);
    // The permuted payoff of player p at this profile reads player
    // sigma(p)'s payoff at the profile with slot j holding what slot
    // sigma^{-1}(j) holds here.
    for (int j = 0; j < n; ++j) moved[j] = profile[inverse[j]];
    int u = 0;
    for (int j = 0; j < n; ++j)
      u = u * space.strategy_count(j + 1) + moved[j];
    for (int p = 0; p < n; ++p)
      m(entry(space, p, t), entry(space, sigma[p], u)) = 1;
  }
  return m;
}

Game apply_player_permutation(const Game& g, const std::vector<int>& sigma) {
  const RatMatrix m = player_permutation_matrix(g.space(), sigma);
  return Game(g.space(), m * g.v());
}

Subspace symmetric_space(const GameSpace& space) {
  if (!space.equal_strategy_counts()) {
    throw DomainError("symmetric subspace requires equal strategy counts, got " +
                      space.signature());
  }
  const int n = space.players();
  if (n > kMaxSymmetricPlayers) {
    throw DomainError("symmetric subspace enumerates all permutations; " +
                      std::to_string(n) + " players exceeds the cap of " +
                      std::to_string(kMaxSymmetricPlayers));
  }
  const int dim = n * checked_profiles(space);
  // Sum of the action over the whole permutation group. Its column space
  // is exactly the fixed subspace: fixed vectors are recovered by averaging
  // and every column sum is itself fixed.
  RatMatrix reynolds(dim, dim);
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    const RatMatrix action = player_permutation_matrix(space, sigma);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        if (action(r, c) != 0) reynolds(r, c) += action(r, c);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Subspace(space, column_reduce(reynolds));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.space() != b.space()) {
    throw DimensionError("subspace intersection across different spaces");
  }
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero_subspace(a.space());
  // Null vectors (alpha; beta) of [A | B] satisfy A alpha = -B beta, so
  // A alpha ranges over the intersection; the alpha blocks are independent
  // because A alpha = 0 forces beta = 0 by independence of B's columns.
  const RatMatrix combined = RatMatrix::hstack(a.basis(), b.basis());
  const RatMatrix kernel = null_space(combined);
  if (kernel.cols() == 0) return Subspace::zero_subspace(a.space());
  const RatMatrix alpha = top_rows(kernel, a.dim());
  return Subspace(a.space(), a.basis() * alpha);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.space() != b.space()) {
    throw DimensionError("subspace sum across different spaces");
  }
  return Subspace(a.space(),
                  column_reduce(RatMatrix::hstack(a.basis(), b.basis())));
}

Subspace orth_complement(const Subspace& a, const InnerProduct& ip) {
  if (a.space() != ip.space()) {
    throw DimensionError("orthogonal complement under a mismatched weight");
  }
  if (a.dim() == 0) return Subspace::full_space(a.space());
  return Subspace(a.space(), null_space(a.basis().transposed() * ip.q()));
}

bool is_member(const Subspace& s, const Game& g) {
  if (s.space() != g.space()) {
    throw DimensionError("membership test across different spaces");
  }
  return in_span(s.basis(), g.v());
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.space() != inner.space()) {
    throw DimensionError("containment test across different spaces");
  }
  if (inner.dim() == 0) return true;
  return rank(RatMatrix::hstack(outer.basis(), inner.basis())) == outer.dim();
}

bool same_span(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && contains(a, b);
}

}  // namespace gamedec
