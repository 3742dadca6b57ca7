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

#ifndef GAMEDEC_COMPAT_HPP_
#define GAMEDEC_COMPAT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gamedec/game.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/scheme.hpp"

namespace gamedec {

// One failed invariance witness: applying the weight (or its inverse) to
// the named basis column left the part. Indices are 1-based.
struct CompatViolation {
  int part = 0;
  int column = 0;
  std::string direction;  // "Q" or "Q^-1"
};

struct CompatReport {
  SchemeName scheme;
  std::string weight_name;
  bool compatible = false;
  std::vector<CompatViolation> violations;
};

// A weight is compatible with a split when every part is invariant under
// both Q and Q^{-1}. Checks every basis column of every part and records
// all violations.
CompatReport is_compatible(const Scheme& scheme, const InnerProduct& ip);

struct TheoremReport {
  CompatReport compat;
  bool orthogonal_standard = false;
  bool orthogonal_weighted = false;
  int trials = 0;
  std::uint64_t seed = 0;
  // Whether, on every sampled game, the component produced under the
  // standard inner product equals the one produced under the weight.
  bool projections_agree = true;
  std::optional<Game> witness;  // first sampled game whose components differ
  int witness_trial = 0;        // 1-based trial index of the witness
  // compatible  <=>  (orthogonal under both) and (projections agree).
  bool theorem_holds = false;
};

// Builds the scheme under the standard inner product, decides compatibility
// of the weight, checks orthogonality under both inner products, and
// compares per-part projections on `trials` seeded random games.
TheoremReport theorem_check(SchemeName name, const GameSpace& space,
                            const InnerProduct& ip, int trials,
                            std::uint64_t seed);

}  // namespace gamedec

#endif  // GAMEDEC_COMPAT_HPP_
