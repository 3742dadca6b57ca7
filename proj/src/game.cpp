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

#include "gamedec/game.hpp"

#include <limits>
#include <sstream>

#include "gamedec/errors.hpp"
#include "gamedec/matrix.hpp"

namespace gamedec {

namespace {

constexpr long long kMaxDim = 1LL << 40;  // keeps index arithmetic overflow-free

}  // namespace

GameSpace::GameSpace(std::vector<int> ks) : ks_(std::move(ks)) {
  n_ = static_cast<int>(ks_.size());
  if (n_ < 1) throw DomainError("game space needs at least one player");
  for (int k : ks_) {
    if (k < 2) throw DomainError("every player needs at least two strategies");
    if (k_ > kMaxDim / k) throw DomainError("game space too large");
    k_ *= k;
  }
  if (k_ > kMaxDim / n_) throw DomainError("game space too large");
  dim_ = static_cast<long long>(n_) * k_;
}

int GameSpace::strategy_count(int player) const {
  if (player < 1 || player > n_) throw DomainError("player index out of range");
  return ks_[player - 1];
}

bool GameSpace::equal_strategy_counts() const {
  for (int k : ks_) {
    if (k != ks_[0]) return false;
  }
  return true;
}

long long GameSpace::stride(int player) const {
  if (player < 1 || player > n_) throw DomainError("player index out of range");
  long long s = 1;
  for (int j = player; j < n_; ++j) s *= ks_[j];
  return s;
}

std::string GameSpace::signature() const {
  std::ostringstream out;
  out << "G[" << n_ << ";";
  for (int i = 0; i < n_; ++i) out << (i ? "," : "") << ks_[i];
  out << "]";
  return out.str();
}

long long profile_to_index(const GameSpace& space, const StrategyProfile& p) {
  if (static_cast<int>(p.size()) != space.players()) {
    throw DomainError("invalid profile: wrong number of strategies");
  }
  long long idx = 0;
  for (int i = 0; i < space.players(); ++i) {
    int s = p[i];
    int ki = space.strategy_counts()[i];
    if (s < 1 || s > ki) {
      throw DomainError("invalid profile: strategy out of range for player " +
                        std::to_string(i + 1));
    }
    idx = idx * ki + (s - 1);
  }
  return idx + 1;
}

StrategyProfile index_to_profile(const GameSpace& space, long long idx) {
  if (idx < 1 || idx > space.profiles()) {
    throw DomainError("profile index out of range");
  }
  long long rest = idx - 1;
  StrategyProfile p(space.players());
  for (int i = space.players() - 1; i >= 0; --i) {
    int ki = space.strategy_counts()[i];
    p[i] = static_cast<int>(rest % ki) + 1;
    rest /= ki;
  }
  return p;
}

Game::Game(GameSpace space, std::vector<Rat> v)
    : space_(std::move(space)), v_(std::move(v)) {
  if (static_cast<long long>(v_.size()) != space_.dim()) {
    throw DimensionError("payoff vector length does not match the space");
  }
}

Game Game::zero(const GameSpace& space) {
  return Game(space, std::vector<Rat>(space.dim(), Rat(0)));
}

const Rat& Game::at(int player, long long idx) const {
  if (player < 1 || player > space_.players()) {
    throw DomainError("player index out of range");
  }
  if (idx < 1 || idx > space_.profiles()) {
    throw DomainError("profile index out of range");
  }
  return v_[(player - 1) * space_.profiles() + idx - 1];
}

Rat& Game::at(int player, long long idx) {
  return const_cast<Rat&>(static_cast<const Game&>(*this).at(player, idx));
}

bool Game::operator==(const Game& other) const {
  return space_ == other.space_ && v_ == other.v_;
}

Game operator+(const Game& a, const Game& b) {
  if (a.space() != b.space()) throw DimensionError("game add: space mismatch");
  return Game(a.space(), add(a.v(), b.v()));
}

Game operator-(const Game& a, const Game& b) {
  if (a.space() != b.space()) throw DimensionError("game sub: space mismatch");
  return Game(a.space(), sub(a.v(), b.v()));
}

Rat payoff(const Game& g, int player, const StrategyProfile& p) {
  return g.at(player, profile_to_index(g.space(), p));
}

Game from_table(const GameSpace& space,
                const std::vector<std::vector<Rat>>& rows) {
  if (static_cast<int>(rows.size()) != space.players()) {
    throw DimensionError("payoff table: expected one row per player");
  }
  std::vector<Rat> v;
  v.reserve(space.dim());
  for (const auto& row : rows) {
    if (static_cast<long long>(row.size()) != space.profiles()) {
      throw DimensionError("payoff table: row length must equal profile count");
    }
    v.insert(v.end(), row.begin(), row.end());
  }
  return Game(space, std::move(v));
}

std::vector<std::vector<Rat>> to_table(const Game& g) {
  const long long k = g.space().profiles();
  std::vector<std::vector<Rat>> rows(g.space().players());
  for (int i = 0; i < g.space().players(); ++i) {
    rows[i].assign(g.v().begin() + i * k, g.v().begin() + (i + 1) * k);
  }
  return rows;
}

}  // namespace gamedec
