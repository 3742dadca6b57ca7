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

#include "gamedec/classify.hpp"

#include <algorithm>
#include <numeric>

#include "gamedec/errors.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/matrix.hpp"

namespace gamedec {

namespace {

// 0-based strategy of player p (0-based) inside 0-based profile index t.
int digit(const GameSpace& space, int p, long long t) {
  return static_cast<int>((t / space.stride(p + 1)) % space.strategy_count(p + 1));
}

}  // namespace

const std::vector<GameClass>& all_game_classes() {
  static const std::vector<GameClass> kAll = {
      GameClass::kZeroSum,      GameClass::kCommonInterest,
      GameClass::kNormalized,   GameClass::kNonStrategic,
      GameClass::kHarmonic,     GameClass::kSymmetric,
      GameClass::kPotential,
  };
  return kAll;
}

std::string to_string(GameClass c) {
  switch (c) {
    case GameClass::kZeroSum: return "zero-sum";
    case GameClass::kCommonInterest: return "common-interest";
    case GameClass::kNormalized: return "normalized";
    case GameClass::kNonStrategic: return "non-strategic";
    case GameClass::kHarmonic: return "harmonic";
    case GameClass::kSymmetric: return "symmetric";
    case GameClass::kPotential: return "potential";
  }
  throw InternalError("unhandled game class");
}

std::optional<GameClass> game_class_from_string(const std::string& name) {
  for (GameClass c : all_game_classes()) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

Subspace class_space(GameClass c, const GameSpace& space) {
  switch (c) {
    case GameClass::kZeroSum: return zero_sum_space(space);
    case GameClass::kCommonInterest: return common_interest_space(space);
    case GameClass::kNormalized: return normalized_space(space);
    case GameClass::kNonStrategic: return non_strategic_space(space);
    case GameClass::kHarmonic: return harmonic_space(space);
    case GameClass::kSymmetric: return symmetric_space(space);
    case GameClass::kPotential: return potential_space(space);
  }
  throw InternalError("unhandled game class");
}

bool is_zero_sum(const Game& g) {
  const GameSpace& space = g.space();
  for (long long t = 1; t <= space.profiles(); ++t) {
    Rat sum = 0;
    for (int p = 1; p <= space.players(); ++p) sum += g.at(p, t);
    if (sum != 0) return false;
  }
  return true;
}

bool is_common_interest(const Game& g) {
  const GameSpace& space = g.space();
  for (long long t = 1; t <= space.profiles(); ++t) {
    for (int p = 2; p <= space.players(); ++p) {
      if (g.at(p, t) != g.at(1, t)) return false;
    }
  }
  return true;
}

bool is_normalized(const Game& g) {
  const GameSpace& space = g.space();
  for (int p = 0; p < space.players(); ++p) {
    const int kp = space.strategy_count(p + 1);
    const long long stride = space.stride(p + 1);
    for (long long t = 0; t < space.profiles(); ++t) {
      if (digit(space, p, t) != 0) continue;
      Rat sum = 0;
      for (int x = 0; x < kp; ++x) sum += g.at(p + 1, t + x * stride + 1);
      if (sum != 0) return false;
    }
  }
  return true;
}

bool is_non_strategic(const Game& g) {
  const GameSpace& space = g.space();
  for (int p = 0; p < space.players(); ++p) {
    const int kp = space.strategy_count(p + 1);
    const long long stride = space.stride(p + 1);
    for (long long t = 0; t < space.profiles(); ++t) {
      if (digit(space, p, t) != 0) continue;
      for (int x = 1; x < kp; ++x) {
        if (g.at(p + 1, t + x * stride + 1) != g.at(p + 1, t + 1)) return false;
      }
    }
  }
  return true;
}

bool is_harmonic(const Game& g) { return is_zero_sum(g) && is_normalized(g); }

bool is_symmetric(const Game& g) {
  const GameSpace& space = g.space();
  if (!space.equal_strategy_counts()) {
    throw DomainError("symmetry test requires equal strategy counts, got " +
                      space.signature());
  }
  const int n = space.players();
  if (n > kMaxSymmetricPlayers) {
    throw DomainError("symmetry test enumerates all permutations; " +
                      std::to_string(n) + " players exceeds the cap of " +
                      std::to_string(kMaxSymmetricPlayers));
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> inverse(n), profile(n);
  do {
    for (int i = 0; i < n; ++i) inverse[sigma[i]] = i;
    for (long long t = 0; t < space.profiles(); ++t) {
      for (int p = 0; p < n; ++p) profile[p] = digit(space, p, t);
      long long u = 0;
      for (int j = 0; j < n; ++j)
        u = u * space.strategy_count(j + 1) + profile[inverse[j]];
      for (int p = 0; p < n; ++p) {
        if (g.at(p + 1, t + 1) != g.at(sigma[p] + 1, u + 1)) return false;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

std::optional<std::vector<Rat>> potential_function(const Game& g) {
  const GameSpace& space = g.space();
  if (space.dim() > (1LL << 20)) {
    throw DomainError("space too large for dense potential solve: " +
                      space.signature());
  }
  const int k = static_cast<int>(space.profiles());
  // One equation per unilateral move: the mover's payoff difference equals
  // the potential difference. Unknowns are the k potential values.
  int rows = 0;
  for (int p = 0; p < space.players(); ++p)
    rows += (space.strategy_count(p + 1) - 1) * (k / space.strategy_count(p + 1));
  RatMatrix system(rows, k);
  std::vector<Rat> rhs(rows);
  int row = 0;
  for (int p = 0; p < space.players(); ++p) {
    const int kp = space.strategy_count(p + 1);
    const int stride = static_cast<int>(space.stride(p + 1));
    for (int t = 0; t < k; ++t) {
      if (digit(space, p, t) != 0) continue;
      for (int x = 0; x + 1 < kp; ++x) {
        const int lo = t + x * stride;
        const int hi = t + (x + 1) * stride;
        system(row, hi) = 1;
        system(row, lo) = -1;
        rhs[row] = g.at(p + 1, hi + 1) - g.at(p + 1, lo + 1);
        ++row;
      }
    }
  }
  return solve_any(system, rhs);
}

bool Classification::has(GameClass c) const {
  return std::find(classes.begin(), classes.end(), c) != classes.end();
}

Classification classify(const Game& g) {
  Classification out;
  if (is_zero_sum(g)) out.classes.push_back(GameClass::kZeroSum);
  if (is_common_interest(g)) out.classes.push_back(GameClass::kCommonInterest);
  if (is_normalized(g)) out.classes.push_back(GameClass::kNormalized);
  if (is_non_strategic(g)) out.classes.push_back(GameClass::kNonStrategic);
  if (is_harmonic(g)) out.classes.push_back(GameClass::kHarmonic);
  if (g.space().equal_strategy_counts() &&
      g.space().players() <= kMaxSymmetricPlayers) {
    if (is_symmetric(g)) out.classes.push_back(GameClass::kSymmetric);
  } else {
    out.symmetry_checked = false;
  }
  out.potential_witness = potential_function(g);
  if (out.potential_witness) out.classes.push_back(GameClass::kPotential);
  return out;
}

}  // namespace gamedec
