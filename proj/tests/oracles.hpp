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

#ifndef GAMEDEC_TESTS_ORACLES_HPP_
#define GAMEDEC_TESTS_ORACLES_HPP_

// Reference implementations used as test oracles. Each one is a direct,
// slow translation of a definition and shares no code with the library path
// it checks; they may lean on lower layers (profile indexing, null_space)
// that carry their own frozen-value tests.

#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/rational.hpp"
#include "gamedec/subspace.hpp"

namespace oracles {

using gamedec::Game;
using gamedec::GameSpace;
using gamedec::Rat;
using gamedec::RatMatrix;
using gamedec::StrategyProfile;

inline Game make_game(const std::vector<int>& ks,
                      const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rat>> table;
  table.reserve(rows.size());
  for (const auto& row : rows) {
    table.emplace_back(row.begin(), row.end());
  }
  return from_table(GameSpace(ks), table);
}

// The smallest game with no potential function and no dominated behavior:
// payoffs [1,-1,-1,1] for player 1 and their negation for player 2.
inline Game matching_pennies() {
  return make_game({2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}});
}

inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          out(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
  return out;
}

inline RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j)
      for (int l = 0; l < a.cols(); ++l) out(i, j) += a(i, l) * b(l, j);
  return out;
}

inline long long lcm(long long a, long long b) {
  long long x = a, y = b;
  while (y != 0) {
    long long t = x % y;
    x = y;
    y = t;
  }
  return a / x * b;
}

// Semi-tensor product straight from its definition.
inline RatMatrix stp(const RatMatrix& a, const RatMatrix& b) {
  const long long t = lcm(a.cols(), b.rows());
  return mul(kron(a, RatMatrix::identity(static_cast<int>(t / a.cols()))),
             kron(b, RatMatrix::identity(static_cast<int>(t / b.rows()))));
}

// Rank by plain forward elimination; no row normalization, no back
// substitution.
inline int rank(RatMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(pivot, r);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) / m(r, c);
      for (int cc = c; cc < m.cols(); ++cc) m(i, cc) -= f * m(r, cc);
    }
    ++r;
  }
  return r;
}

// Exact-potential test by the four-cycle criterion: around every unilateral
// deviation square of two players, the deviators' payoff changes sum to
// zero.
inline bool potential_by_cycles(const Game& g) {
  const GameSpace& space = g.space();
  const int n = space.players();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (long long idx = 1; idx <= space.profiles(); ++idx) {
        const StrategyProfile base = index_to_profile(space, idx);
        for (int xi = 1; xi <= space.strategy_counts()[i]; ++xi) {
          for (int xj = 1; xj <= space.strategy_counts()[j]; ++xj) {
            StrategyProfile p10 = base;
            p10[i] = xi;
            StrategyProfile p11 = p10;
            p11[j] = xj;
            StrategyProfile p01 = base;
            p01[j] = xj;
            const Rat total = (payoff(g, i + 1, p10) - payoff(g, i + 1, base)) +
                              (payoff(g, j + 1, p11) - payoff(g, j + 1, p10)) +
                              (payoff(g, i + 1, p01) - payoff(g, i + 1, p11)) +
                              (payoff(g, j + 1, base) - payoff(g, j + 1, p01));
            if (total != 0) return false;
          }
        }
      }
    }
  }
  return true;
}

// Checks a claimed potential function value-by-value: every own-strategy
// switch changes the mover's payoff by exactly the potential difference.
inline bool witness_matches(const Game& g, const std::vector<Rat>& potential) {
  const GameSpace& space = g.space();
  for (long long idx = 1; idx <= space.profiles(); ++idx) {
    const StrategyProfile s = index_to_profile(space, idx);
    for (int i = 0; i < space.players(); ++i) {
      for (int alt = 1; alt <= space.strategy_counts()[i]; ++alt) {
        StrategyProfile t = s;
        t[i] = alt;
        const long long tidx = profile_to_index(space, t);
        if (payoff(g, i + 1, t) - payoff(g, i + 1, s) !=
            potential[tidx - 1] - potential[idx - 1]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Player-permutation action computed through strategy profiles instead of
// index strides. sigma is 0-based.
inline Game permute_players(const Game& g, const std::vector<int>& sigma) {
  const GameSpace& space = g.space();
  const int n = space.players();
  std::vector<int> inverse(n);
  for (int i = 0; i < n; ++i) inverse[sigma[i]] = i;
  Game out = Game::zero(space);
  for (long long idx = 1; idx <= space.profiles(); ++idx) {
    const StrategyProfile s = index_to_profile(space, idx);
    StrategyProfile moved(n);
    for (int j = 0; j < n; ++j) moved[j] = s[inverse[j]];
    for (int i = 0; i < n; ++i) {
      out.at(i + 1, idx) = payoff(g, sigma[i] + 1, moved);
    }
  }
  return out;
}

// Action of a permutation as a matrix, one standard basis game at a time.
inline RatMatrix action_matrix(const GameSpace& space,
                               const std::vector<int>& sigma) {
  const int dim = static_cast<int>(space.dim());
  RatMatrix m(dim, dim);
  for (int c = 0; c < dim; ++c) {
    std::vector<Rat> e(dim, Rat(0));
    e[c] = 1;
    const Game permuted = permute_players(Game(space, e), sigma);
    for (int r = 0; r < dim; ++r) m(r, c) = permuted.v()[r];
  }
  return m;
}

// Fixed space of the player-permutation action from two generators: the
// transposition (1 2) and the full cycle. These generate every permutation,
// so a vector fixed by both is fixed by all.
inline RatMatrix symmetric_fixed_space(const GameSpace& space) {
  const int n = space.players();
  const int dim = static_cast<int>(space.dim());
  std::vector<int> swap_first_two(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap_first_two[i] = i;
    cycle[i] = (i + 1) % n;
  }
  if (n > 1) {
    swap_first_two[0] = 1;
    swap_first_two[1] = 0;
  }
  const RatMatrix eye = RatMatrix::identity(dim);
  const RatMatrix stacked =
      RatMatrix::vstack(action_matrix(space, swap_first_two) - eye,
                        action_matrix(space, cycle) - eye);
  return gamedec::null_space(stacked);
}

}  // namespace oracles

#endif  // GAMEDEC_TESTS_ORACLES_HPP_
