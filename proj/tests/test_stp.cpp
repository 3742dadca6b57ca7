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

#include "doctest.h"

#include "gamedec/errors.hpp"
#include "gamedec/random_game.hpp"
#include "gamedec/stp.hpp"
#include "oracles.hpp"

using gamedec::delta;
using gamedec::RatMatrix;
using gamedec::stp;

TEST_CASE("delta unit vectors") {
  const RatMatrix d = delta(3, 2);
  CHECK(d.rows() == 3);
  CHECK(d.cols() == 1);
  CHECK(d(0, 0) == 0);
  CHECK(d(1, 0) == 1);
  CHECK(d(2, 0) == 0);
  CHECK_THROWS_AS(delta(3, 0), gamedec::DomainError);
  CHECK_THROWS_AS(delta(3, 4), gamedec::DomainError);
}

TEST_CASE("stp reduces to the ordinary product when conformable") {
  gamedec::Rng rng(11);
  const RatMatrix a = gamedec::random_matrix(3, 4, &rng);
  const RatMatrix b = gamedec::random_matrix(4, 2, &rng);
  CHECK(stp(a, b) == a * b);
}

TEST_CASE("stp unit-vector law") {
  // delta_m^i x delta_n^j = delta_{mn}^{(i-1)n + j}, checked exhaustively
  // for m, n up to 6.
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          CHECK(stp(delta(m, i), delta(n, j)) == delta(m * n, (i - 1) * n + j));
        }
      }
    }
  }
}

TEST_CASE("stp row-vector contraction, frozen example") {
  // [1 2 3 4] x delta_2^1 keeps the first half, delta_2^2 the second.
  const RatMatrix row = RatMatrix::from_rows({{1, 2, 3, 4}});
  CHECK(stp(row, delta(2, 1)) == RatMatrix::from_rows({{1, 2}}));
  CHECK(stp(row, delta(2, 2)) == RatMatrix::from_rows({{3, 4}}));
}

TEST_CASE("stp matches the oracle on random shapes") {
  gamedec::Rng rng(13);
  for (int round = 0; round < 20; ++round) {
    const int m = static_cast<int>(rng.uniform(1, 4));
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int p = static_cast<int>(rng.uniform(1, 4));
    const int q = static_cast<int>(rng.uniform(1, 4));
    const RatMatrix a = gamedec::random_matrix(m, n, &rng, 3, 2);
    const RatMatrix b = gamedec::random_matrix(p, q, &rng, 3, 2);
    CHECK(stp(a, b) == oracles::stp(a, b));
  }
}

TEST_CASE("stp is associative") {
  gamedec::Rng rng(17);
  for (int round = 0; round < 8; ++round) {
    const RatMatrix a =
        gamedec::random_matrix(static_cast<int>(rng.uniform(1, 6)),
                               static_cast<int>(rng.uniform(1, 6)), &rng, 2, 1);
    const RatMatrix b =
        gamedec::random_matrix(static_cast<int>(rng.uniform(1, 6)),
                               static_cast<int>(rng.uniform(1, 6)), &rng, 2, 1);
    const RatMatrix c =
        gamedec::random_matrix(static_cast<int>(rng.uniform(1, 6)),
                               static_cast<int>(rng.uniform(1, 6)), &rng, 2, 1);
    CHECK(stp(stp(a, b), c) == stp(a, stp(b, c)));
  }
}
