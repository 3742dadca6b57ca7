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

#include "gamedec/random_game.hpp"

#include <vector>

#include "gamedec/errors.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/rational.hpp"

namespace gamedec {

namespace {

// splitmix64 step (Steele, Lea, Flood; public domain reference constants).
std::uint64_t splitmix64(std::uint64_t* state) {
  std::uint64_t z = (*state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next() { return splitmix64(&state_); }

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw DomainError("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = next();
  } while (draw >= limit);
  return lo + static_cast<long long>(draw % span);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master;
  std::uint64_t mixed = splitmix64(&state) ^ (index + 0x9e3779b97f4a7c15ULL);
  return splitmix64(&mixed);
}

Game random_game(const GameSpace& space, Rng* rng) {
  std::vector<Rat> v(static_cast<std::size_t>(space.dim()));
  for (Rat& entry : v) {
    entry = make_rat(rng->uniform(-9, 9), rng->uniform(1, 4));
  }
  return Game(space, std::move(v));
}

Game random_game(const GameSpace& space, std::uint64_t seed) {
  Rng rng(seed);
  return random_game(space, &rng);
}

Game random_member(const Subspace& s, Rng* rng) {
  if (s.dim() == 0) return Game::zero(s.space());
  std::vector<Rat> coeffs(static_cast<std::size_t>(s.dim()));
  // Redraw all-zero coefficient vectors; 64 straight misses would mean a
  // broken generator.
  for (int attempt = 0; attempt < 64; ++attempt) {
    bool all_zero = true;
    for (Rat& c : coeffs) {
      const long long draw = rng->uniform(-3, 3);
      c = make_rat(static_cast<long>(draw));
      if (draw != 0) all_zero = false;
    }
    if (!all_zero) return Game(s.space(), s.basis() * coeffs);
  }
  throw InternalError("random_member: generator kept returning zero");
}

Game random_member(const Subspace& s, std::uint64_t seed) {
  Rng rng(seed);
  return random_member(s, &rng);
}

RatMatrix random_matrix(int rows, int cols, Rng* rng, long long num_bound,
                        long long den_bound) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      m(r, c) = make_rat(rng->uniform(-num_bound, num_bound),
                         rng->uniform(1, den_bound));
    }
  }
  return m;
}

RatMatrix random_spd_matrix(int dim, Rng* rng) {
  const RatMatrix a = random_matrix(dim, dim, rng, 2, 1);
  return a.transposed() * a + RatMatrix::identity(dim);
}

RatMatrix random_invertible_matrix(int dim, Rng* rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    RatMatrix m = random_matrix(dim, dim, rng, 3, 1);
    if (rank(m) == dim) return m;
  }
  throw InternalError("random_invertible_matrix: kept drawing singular");
}

}  // namespace gamedec
