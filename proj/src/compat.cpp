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

#include "gamedec/compat.hpp"

#include <cstddef>
#include <utility>

#include "gamedec/errors.hpp"
#include "gamedec/kernels.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/random_game.hpp"

namespace gamedec {

namespace {

// Appends one violation per column of `image` that leaves the span
// characterized by the span projector `pi`.
void check_invariance(const RatMatrix& pi, const RatMatrix& image,
                      int part_index, const std::string& direction,
                      std::vector<CompatViolation>* violations) {
  const RatMatrix residual = pi * image - image;
  for (int c = 0; c < residual.cols(); ++c) {
    for (int r = 0; r < residual.rows(); ++r) {
      if (residual(r, c) != 0) {
        violations->push_back({part_index, c + 1, direction});
        break;
      }
    }
  }
}

}  // namespace

CompatReport is_compatible(const Scheme& scheme, const InnerProduct& ip) {
  if (ip.space() != scheme.space()) {
    throw DimensionError("compatibility check under a mismatched weight");
  }
  CompatReport out;
  out.scheme = scheme.name();
  out.weight_name = ip.name();
  const RatMatrix q_inverse = inverse(ip.q());
  const InnerProduct plain = InnerProduct::standard(scheme.space());
  for (std::size_t j = 0; j < scheme.parts().size(); ++j) {
    const Subspace& part = scheme.parts()[j];
    if (part.dim() == 0) continue;
    const RatMatrix pi = projector(plain, part);
    check_invariance(pi, ip.q() * part.basis(), static_cast<int>(j) + 1, "Q",
                     &out.violations);
    check_invariance(pi, q_inverse * part.basis(), static_cast<int>(j) + 1,
                     "Q^-1", &out.violations);
  }
  out.compatible = out.violations.empty();
  return out;
}

TheoremReport theorem_check(SchemeName name, const GameSpace& space,
                            const InnerProduct& ip, int trials,
                            std::uint64_t seed) {
  if (trials < 0) throw DomainError("trial count must be nonnegative");
  if (ip.space() != space) {
    throw DimensionError("theorem check under a mismatched weight");
  }
  const InnerProduct plain = InnerProduct::standard(space);
  const Scheme scheme = build_scheme(name, space, plain);

  TheoremReport out;
  out.compat = is_compatible(scheme, ip);
  out.orthogonal_standard = verify_orthogonality(scheme, plain);
  out.orthogonal_weighted = verify_orthogonality(scheme, ip);
  out.trials = trials;
  out.seed = seed;

  std::vector<RatMatrix> proj_plain, proj_weighted;
  proj_plain.reserve(scheme.parts().size());
  proj_weighted.reserve(scheme.parts().size());
  for (const Subspace& part : scheme.parts()) {
    proj_plain.push_back(projector(plain, part));
    proj_weighted.push_back(projector(ip, part));
  }

  // Trials are independent: each draws its game from a seed derived from
  // (seed, trial), so results do not depend on the thread schedule.
  std::vector<char> disagreed(static_cast<std::size_t>(trials), 0);
  std::vector<std::optional<Game>> failing(static_cast<std::size_t>(trials));
  auto run_trial = [&](int t) {
    Game g = random_game(space, derive_seed(seed, static_cast<std::uint64_t>(t)));
    for (std::size_t j = 0; j < proj_plain.size(); ++j) {
      if (!(proj_plain[j] * g.v() == proj_weighted[j] * g.v())) {
        disagreed[t] = 1;
        failing[t] = std::move(g);
        return;
      }
    }
  };
#ifdef _OPENMP
  if (kernels::mode() != kernels::Mode::kSerial && trials > 1) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    for (int t = 0; t < trials; ++t) run_trial(t);
  }
#else
  for (int t = 0; t < trials; ++t) run_trial(t);
#endif
  for (int t = 0; t < trials; ++t) {
    if (disagreed[t]) {
      out.projections_agree = false;
      out.witness = std::move(failing[t]);
      out.witness_trial = t + 1;
      break;
    }
  }

  out.theorem_holds =
      out.compat.compatible == (out.orthogonal_standard &&
                                out.orthogonal_weighted &&
                                out.projections_agree);
  return out;
}

}  // namespace gamedec
