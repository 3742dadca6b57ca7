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

#ifndef GAMEDEC_INNER_PRODUCT_HPP_
#define GAMEDEC_INNER_PRODUCT_HPP_

#include <string>
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/rational.hpp"
#include "gamedec/subspace.hpp"

namespace gamedec {

// A weighted inner product <x, y> = x^T Q y on payoff space. Construction
// verifies that Q is symmetric positive definite by exact elimination.
class InnerProduct {
 public:
  InnerProduct(GameSpace space, RatMatrix q, std::string name = "custom");

  // Q = I.
  static InnerProduct standard(const GameSpace& space);
  // Q is diagonal; the weight of every entry belonging to player i is that
  // player's strategy count.
  static InnerProduct candogan(const GameSpace& space);

  const GameSpace& space() const { return space_; }
  const RatMatrix& q() const { return q_; }
  const std::string& name() const { return name_; }

 private:
  GameSpace space_;
  RatMatrix q_;
  std::string name_;
};

Rat inner(const InnerProduct& ip, const std::vector<Rat>& x,
          const std::vector<Rat>& y);
Rat inner(const InnerProduct& ip, const Game& x, const Game& y);

// Orthogonal projection matrix onto the subspace: B (B^T Q B)^{-1} B^T Q.
RatMatrix projector(const InnerProduct& ip, const Subspace& s);

// Orthogonal projection of one game, without forming the full projector.
Game project(const InnerProduct& ip, const Subspace& s, const Game& g);

}  // namespace gamedec

#endif  // GAMEDEC_INNER_PRODUCT_HPP_
