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

#include "gamedec/stp.hpp"

#include <numeric>

#include "gamedec/errors.hpp"

namespace gamedec {

RatMatrix delta(int n, int i) {
  if (n < 1 || i < 1 || i > n) throw DomainError("delta: index out of range");
  RatMatrix m(n, 1);
  m(i - 1, 0) = 1;
  return m;
}

RatMatrix stp(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() == 0 || b.rows() == 0) {
    throw DimensionError("stp: empty inner dimension");
  }
  long long t = std::lcm<long long>(a.cols(), b.rows());
  int left_copies = static_cast<int>(t / a.cols());
  int right_copies = static_cast<int>(t / b.rows());
  const RatMatrix& left =
      left_copies == 1 ? a : RatMatrix::kron(a, RatMatrix::identity(left_copies));
  const RatMatrix& right =
      right_copies == 1 ? b : RatMatrix::kron(b, RatMatrix::identity(right_copies));
  return left * right;
}

}  // namespace gamedec
