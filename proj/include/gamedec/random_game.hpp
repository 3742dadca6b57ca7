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

#ifndef GAMEDEC_RANDOM_GAME_HPP_
#define GAMEDEC_RANDOM_GAME_HPP_

#include <cstdint>

#include "gamedec/game.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/subspace.hpp"

namespace gamedec {

// Deterministic 64-bit generator (splitmix64). The standard library's
// distributions vary across implementations; this one produces the same
// stream on every platform, which keeps seeded runs reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [lo, hi], both inclusive. Uses rejection sampling, so the
  // result is unbiased and platform independent.
  long long uniform(long long lo, long long hi);

 private:
  std::uint64_t state_;
};

// Stable per-index seed derived from a master seed, so items of a seeded
// batch can be generated independently and in any order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Payoff entries are fractions with numerator in [-9, 9] and denominator
// in [1, 4].
Game random_game(const GameSpace& space, Rng* rng);
Game random_game(const GameSpace& space, std::uint64_t seed);

// Random combination of basis vectors with coefficients in [-3, 3],
// redrawn if every coefficient lands on zero. The zero subspace yields the
// zero game.
Game random_member(const Subspace& s, Rng* rng);
Game random_member(const Subspace& s, std::uint64_t seed);

// Entries are fractions with numerator in [-num_bound, num_bound] and
// denominator in [1, den_bound].
RatMatrix random_matrix(int rows, int cols, Rng* rng, long long num_bound = 9,
                        long long den_bound = 4);

// A^T A + I for a random integer A; symmetric positive definite by
// construction.
RatMatrix random_spd_matrix(int dim, Rng* rng);

// Random integer matrix redrawn until nonsingular.
RatMatrix random_invertible_matrix(int dim, Rng* rng);

}  // namespace gamedec

#endif  // GAMEDEC_RANDOM_GAME_HPP_
