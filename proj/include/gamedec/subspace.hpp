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

#ifndef GAMEDEC_SUBSPACE_HPP_
#define GAMEDEC_SUBSPACE_HPP_

#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/matrix.hpp"

namespace gamedec {

class InnerProduct;

// Symmetry constructions enumerate all n! player permutations.
inline constexpr int kMaxSymmetricPlayers = 8;

// A linear subspace of payoff space, held as an exact basis matrix with
// independent columns. Basis columns built by this library are integral.
class Subspace {
 public:
  // Verifies exact linear independence of the columns.
  Subspace(GameSpace space, RatMatrix basis);

  static Subspace zero_subspace(const GameSpace& space);
  static Subspace full_space(const GameSpace& space);

  const GameSpace& space() const { return space_; }
  const RatMatrix& basis() const { return basis_; }
  int dim() const { return basis_.cols(); }

 private:
  GameSpace space_;
  RatMatrix basis_;
};

// Games whose payoffs sum to zero at every profile. Dimension (n-1)k.
Subspace zero_sum_space(const GameSpace& space);

// Games where all players receive the same payoff everywhere. Dimension k.
Subspace common_interest_space(const GameSpace& space);

// Games where each player's payoff sums to zero over their own strategies,
// for every fixed opponent profile. Dimension sum_i (k_i-1) k/k_i.
Subspace normalized_space(const GameSpace& space);

// Games where no player's payoff depends on their own strategy. Dimension
// sum_i k/k_i.
Subspace non_strategic_space(const GameSpace& space);

// Zero-sum and normalized at once.
Subspace harmonic_space(const GameSpace& space);

// Fixed subspace of the player-permutation action, built by summing the
// action of every permutation over the standard basis and extracting an
// image basis. Requires equal strategy counts and n <= 8 (the construction
// enumerates all n! permutations).
Subspace symmetric_space(const GameSpace& space);

// Games admitting a potential function, including their non-strategic
// parts. Computed as the projection onto the payoff coordinates of the
// solution space of the defining linear system in (payoffs, potential).
Subspace potential_space(const GameSpace& space);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Orthogonal complement with respect to the given inner product: the null
// space of basis(a)^T Q.
Subspace orth_complement(const Subspace& a, const InnerProduct& ip);

bool is_member(const Subspace& s, const Game& g);
bool contains(const Subspace& outer, const Subspace& inner);
bool same_span(const Subspace& a, const Subspace& b);

// Payoff-vector action of a player permutation: player i takes over the
// role of sigma(i), strategy slots move along. sigma is 0-based.
Game apply_player_permutation(const Game& g, const std::vector<int>& sigma);
RatMatrix player_permutation_matrix(const GameSpace& space,
                                    const std::vector<int>& sigma);

}  // namespace gamedec

#endif  // GAMEDEC_SUBSPACE_HPP_
