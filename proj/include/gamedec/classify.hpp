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

#ifndef GAMEDEC_CLASSIFY_HPP_
#define GAMEDEC_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/rational.hpp"
#include "gamedec/subspace.hpp"

namespace gamedec {

enum class GameClass {
  kZeroSum,
  kCommonInterest,
  kNormalized,
  kNonStrategic,
  kHarmonic,
  kSymmetric,
  kPotential,
};

// All classes, in the order classify() reports them.
const std::vector<GameClass>& all_game_classes();

std::string to_string(GameClass c);
std::optional<GameClass> game_class_from_string(const std::string& name);

// The subspace formed by all games of the given class.
Subspace class_space(GameClass c, const GameSpace& space);

// Definitional membership tests, evaluated directly on the payoff entries
// rather than through the subspace bases.
bool is_zero_sum(const Game& g);
bool is_common_interest(const Game& g);
bool is_normalized(const Game& g);
bool is_non_strategic(const Game& g);
bool is_harmonic(const Game& g);
// Throws DomainError when strategy counts differ or players exceed the
// permutation-enumeration cap.
bool is_symmetric(const Game& g);

// A potential function for g, or nullopt when none exists. The witness
// lists one value per strategy profile, in profile-index order.
std::optional<std::vector<Rat>> potential_function(const Game& g);

struct Classification {
  std::vector<GameClass> classes;
  std::optional<std::vector<Rat>> potential_witness;
  // False when the symmetry test was skipped (unequal strategy counts or
  // too many players for permutation enumeration).
  bool symmetry_checked = true;

  bool has(GameClass c) const;
};

Classification classify(const Game& g);

}  // namespace gamedec

#endif  // GAMEDEC_CLASSIFY_HPP_
