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

#ifndef GAMEDEC_SCHEME_HPP_
#define GAMEDEC_SCHEME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/matrix.hpp"
#include "gamedec/subspace.hpp"

namespace gamedec {

enum class SchemeName {
  kPotential,      // pure potential + non-strategic + pure harmonic
  kZeroSum,        // zero-sum + common-interest
  kNormalization,  // normalized + non-strategic
  kZsep,           // normalized common-interest + zero-sum-equivalent
                   // potential + normalized zero-sum
  kSymmetry,       // symmetric + orthogonal complement
};

const std::vector<SchemeName>& all_scheme_names();
std::string to_string(SchemeName s);
std::optional<SchemeName> scheme_name_from_string(const std::string& name);

// A direct-sum split of the whole payoff space into named parts.
// Construction verifies that the parts live in one space, that their
// dimensions sum to the full dimension, and that the stacked basis is
// invertible; the inverse is kept so decompositions are a single
// matrix-vector product.
class Scheme {
 public:
  Scheme(SchemeName name, GameSpace space, std::string weight_name,
         std::vector<Subspace> parts, std::vector<std::string> part_names);

  SchemeName name() const { return name_; }
  const GameSpace& space() const { return space_; }
  // Name of the weight the scheme was built under. Only the potential and
  // symmetry splits depend on it.
  const std::string& weight_name() const { return weight_name_; }
  const std::vector<Subspace>& parts() const { return parts_; }
  const std::vector<std::string>& part_names() const { return part_names_; }
  const RatMatrix& stacked() const { return stacked_; }
  const RatMatrix& coordinate_solver() const { return solver_; }

 private:
  SchemeName name_;
  GameSpace space_;
  std::string weight_name_;
  std::vector<Subspace> parts_;
  std::vector<std::string> part_names_;
  RatMatrix stacked_;
  RatMatrix solver_;
};

// Builds the named split over the space, using the weight where the split
// depends on one. Throws DomainError when the weight cannot produce the
// split (the potential split requires the complement of non-strategic plus
// harmonic to consist of potential games).
Scheme build_scheme(SchemeName name, const GameSpace& space,
                    const InnerProduct& ip);

// True when all distinct parts are pairwise orthogonal under the weight.
bool verify_orthogonality(const Scheme& scheme, const InnerProduct& ip);

struct Decomposition {
  SchemeName scheme;
  std::string weight_name;
  std::vector<std::string> part_names;
  std::vector<Game> components;
  bool orthogonal = false;
};

// Splits a game along the scheme. The components always sum to the input;
// when the scheme is orthogonal under the weight, each component is checked
// against the orthogonal projection onto its part.
Decomposition decompose(const Scheme& scheme, const InnerProduct& ip,
                        const Game& g);

// Same as decompose(), with orthogonality and projectors computed once and
// reused across calls.
class Decomposer {
 public:
  Decomposer(Scheme scheme, InnerProduct ip);

  const Scheme& scheme() const { return scheme_; }
  bool orthogonal() const { return orthogonal_; }
  Decomposition decompose(const Game& g) const;

 private:
  Scheme scheme_;
  InnerProduct ip_;
  bool orthogonal_;
  std::vector<RatMatrix> projectors_;  // one per part when orthogonal
};

}  // namespace gamedec

#endif  // GAMEDEC_SCHEME_HPP_
