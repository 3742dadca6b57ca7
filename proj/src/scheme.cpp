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

#include "gamedec/scheme.hpp"

#include <utility>

#include "gamedec/errors.hpp"
#include "gamedec/linalg.hpp"

namespace gamedec {

const std::vector<SchemeName>& all_scheme_names() {
  static const std::vector<SchemeName> kAll = {
      SchemeName::kPotential, SchemeName::kZeroSum, SchemeName::kNormalization,
      SchemeName::kZsep, SchemeName::kSymmetry,
  };
  return kAll;
}

std::string to_string(SchemeName s) {
  switch (s) {
    case SchemeName::kPotential: return "potential";
    case SchemeName::kZeroSum: return "zero-sum";
    case SchemeName::kNormalization: return "normalization";
    case SchemeName::kZsep: return "zsep";
    case SchemeName::kSymmetry: return "symmetry";
  }
  throw InternalError("unhandled scheme name");
}

std::optional<SchemeName> scheme_name_from_string(const std::string& name) {
  for (SchemeName s : all_scheme_names()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

Scheme::Scheme(SchemeName name, GameSpace space, std::string weight_name,
               std::vector<Subspace> parts, std::vector<std::string> part_names)
    : name_(name),
      space_(std::move(space)),
      weight_name_(std::move(weight_name)),
      parts_(std::move(parts)),
      part_names_(std::move(part_names)) {
  if (parts_.empty() || parts_.size() != part_names_.size()) {
    throw DimensionError("scheme parts and part names must match");
  }
  long long total = 0;
  for (const Subspace& part : parts_) {
    if (part.space() != space_) {
      throw DimensionError("scheme part built over a different space");
    }
    total += part.dim();
  }
  if (total != space_.dim()) {
    throw DomainError("scheme parts have total dimension " +
                      std::to_string(total) + ", expected " +
                      std::to_string(space_.dim()));
  }
  stacked_ = parts_[0].basis();
  for (size_t i = 1; i < parts_.size(); ++i) {
    stacked_ = RatMatrix::hstack(stacked_, parts_[i].basis());
  }
  try {
    solver_ = inverse(stacked_);
  } catch (const DomainError&) {
    throw DomainError("scheme parts do not form a direct sum");
  }
}

Scheme build_scheme(SchemeName name, const GameSpace& space,
                    const InnerProduct& ip) {
  if (ip.space() != space) {
    throw DimensionError("scheme weight built over a different space");
  }
  switch (name) {
    case SchemeName::kPotential: {
      Subspace harmonic = harmonic_space(space);
      Subspace non_strategic = non_strategic_space(space);
      Subspace pure_potential =
          orth_complement(subspace_sum(non_strategic, harmonic), ip);
      // The complement must consist of potential games, otherwise the split
      // does not separate potential from harmonic behavior.
      if (!contains(potential_space(space), pure_potential)) {
        throw DomainError(
            "the '" + ip.name() +
            "' weight does not produce a potential split on " +
            space.signature() +
            ": the complement of non-strategic plus harmonic leaves the "
            "potential subspace");
      }
      return Scheme(name, space, ip.name(),
                    {std::move(pure_potential), std::move(non_strategic),
                     std::move(harmonic)},
                    {"pure-potential", "non-strategic", "pure-harmonic"});
    }
    case SchemeName::kZeroSum:
      return Scheme(name, space, ip.name(),
                    {zero_sum_space(space), common_interest_space(space)},
                    {"zero-sum", "common-interest"});
    case SchemeName::kNormalization:
      return Scheme(name, space, ip.name(),
                    {normalized_space(space), non_strategic_space(space)},
                    {"normalized", "non-strategic"});
    case SchemeName::kZsep: {
      Subspace zero_sum = zero_sum_space(space);
      Subspace common = common_interest_space(space);
      Subspace normalized = normalized_space(space);
      Subspace non_strategic = non_strategic_space(space);
      Subspace middle = intersect(subspace_sum(zero_sum, non_strategic),
                                  subspace_sum(common, non_strategic));
      return Scheme(name, space, ip.name(),
                    {intersect(normalized, common), std::move(middle),
                     intersect(normalized, zero_sum)},
                    {"normalized-common-interest",
                     "zero-sum-equivalent-potential", "normalized-zero-sum"});
    }
    case SchemeName::kSymmetry: {
      Subspace symmetric = symmetric_space(space);
      Subspace complement = orth_complement(symmetric, ip);
      return Scheme(name, space, ip.name(),
                    {std::move(symmetric), std::move(complement)},
                    {"symmetric", "orthogonal-complement"});
    }
  }
  throw InternalError("unhandled scheme name");
}

bool verify_orthogonality(const Scheme& scheme, const InnerProduct& ip) {
  if (ip.space() != scheme.space()) {
    throw DimensionError("orthogonality check under a mismatched weight");
  }
  const auto& parts = scheme.parts();
  for (size_t j = 1; j < parts.size(); ++j) {
    if (parts[j].dim() == 0) continue;
    const RatMatrix qb = ip.q() * parts[j].basis();
    for (size_t i = 0; i < j; ++i) {
      if (parts[i].dim() == 0) continue;
      if (!(parts[i].basis().transposed() * qb).is_zero()) return false;
    }
  }
  return true;
}

namespace {

std::vector<Game> split_by_coordinates(const Scheme& scheme, const Game& g) {
  const std::vector<Rat> coords = scheme.coordinate_solver() * g.v();
  std::vector<Game> components;
  components.reserve(scheme.parts().size());
  int offset = 0;
  for (const Subspace& part : scheme.parts()) {
    std::vector<Rat> local(coords.begin() + offset,
                           coords.begin() + offset + part.dim());
    components.push_back(Game(g.space(), part.basis() * local));
    offset += part.dim();
  }
  Game total = Game::zero(g.space());
  for (const Game& c : components) total = total + c;
  if (!(total == g)) {
    throw InternalError("decomposition components do not sum to the input");
  }
  return components;
}

}  // namespace

Decomposition decompose(const Scheme& scheme, const InnerProduct& ip,
                        const Game& g) {
  if (g.space() != scheme.space() || ip.space() != scheme.space()) {
    throw DimensionError("decomposition across different spaces");
  }
  Decomposition out;
  out.scheme = scheme.name();
  out.weight_name = ip.name();
  out.part_names = scheme.part_names();
  out.components = split_by_coordinates(scheme, g);
  out.orthogonal = verify_orthogonality(scheme, ip);
  if (out.orthogonal) {
    // For an orthogonal split the direct-sum component and the orthogonal
    // projection agree; check it.
    for (size_t j = 0; j < scheme.parts().size(); ++j) {
      if (!(project(ip, scheme.parts()[j], g) == out.components[j])) {
        throw InternalError(
            "orthogonal decomposition disagrees with projection");
      }
    }
  }
  return out;
}

Decomposer::Decomposer(Scheme scheme, InnerProduct ip)
    : scheme_(std::move(scheme)), ip_(std::move(ip)) {
  if (ip_.space() != scheme_.space()) {
    throw DimensionError("decomposer weight built over a different space");
  }
  orthogonal_ = verify_orthogonality(scheme_, ip_);
  if (orthogonal_) {
    projectors_.reserve(scheme_.parts().size());
    for (const Subspace& part : scheme_.parts()) {
      projectors_.push_back(projector(ip_, part));
    }
  }
}

Decomposition Decomposer::decompose(const Game& g) const {
  if (g.space() != scheme_.space()) {
    throw DimensionError("decomposition across different spaces");
  }
  Decomposition out;
  out.scheme = scheme_.name();
  out.weight_name = ip_.name();
  out.part_names = scheme_.part_names();
  out.components = split_by_coordinates(scheme_, g);
  out.orthogonal = orthogonal_;
  if (orthogonal_) {
    for (size_t j = 0; j < projectors_.size(); ++j) {
      if (!(Game(g.space(), projectors_[j] * g.v()) == out.components[j])) {
        throw InternalError(
            "orthogonal decomposition disagrees with projection");
      }
    }
  }
  return out;
}

}  // namespace gamedec
