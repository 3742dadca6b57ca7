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

#ifndef GAMEDEC_GAME_HPP_
#define GAMEDEC_GAME_HPP_

#include <string>
#include <vector>

#include "gamedec/rational.hpp"

namespace gamedec {

// The ambient space of finite games with n players, player i choosing among
// ks[i] pure strategies. k is the number of strategy profiles and dim = n*k
// the length of a payoff vector.
class GameSpace {
 public:
  explicit GameSpace(std::vector<int> ks);

  int players() const { return n_; }
  const std::vector<int>& strategy_counts() const { return ks_; }
  int strategy_count(int player) const;  // player is 1-based
  long long profiles() const { return k_; }
  long long dim() const { return dim_; }
  bool equal_strategy_counts() const;

  // Index stride of player i's own coordinate in the profile order.
  long long stride(int player) const;

  bool operator==(const GameSpace& other) const { return ks_ == other.ks_; }
  bool operator!=(const GameSpace& other) const { return !(*this == other); }

  std::string signature() const;  // e.g. "G[3;2,2,2]"

 private:
  int n_ = 0;
  std::vector<int> ks_;
  long long k_ = 1;
  long long dim_ = 0;
};

// 1-based strategy choices, one per player.
using StrategyProfile = std::vector<int>;

// Lexicographic profile index, player 1 most significant, 1-based. This is
// the layout the delta-vector calculus induces: profile (1,...,1) maps to 1
// and (k_1,...,k_n) to k.
long long profile_to_index(const GameSpace& space, const StrategyProfile& p);
StrategyProfile index_to_profile(const GameSpace& space, long long idx);

// A finite game, identified with its payoff vector: n blocks of length k,
// block i holding the structure vector of player i's payoff function.
class Game {
 public:
  Game(GameSpace space, std::vector<Rat> v);
  static Game zero(const GameSpace& space);

  const GameSpace& space() const { return space_; }
  const std::vector<Rat>& v() const { return v_; }
  std::vector<Rat>& v() { return v_; }

  // Entry (player, profile index), both 1-based.
  const Rat& at(int player, long long idx) const;
  Rat& at(int player, long long idx);

  bool operator==(const Game& other) const;

 private:
  GameSpace space_;
  std::vector<Rat> v_;
};

Game operator+(const Game& a, const Game& b);
Game operator-(const Game& a, const Game& b);

Rat payoff(const Game& g, int player, const StrategyProfile& p);

// Payoff table rows (one per player, profile-index order) to payoff vector
// and back. Exact inverses of each other.
Game from_table(const GameSpace& space,
                const std::vector<std::vector<Rat>>& rows);
std::vector<std::vector<Rat>> to_table(const Game& g);

}  // namespace gamedec

#endif  // GAMEDEC_GAME_HPP_
