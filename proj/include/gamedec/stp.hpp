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

#ifndef GAMEDEC_STP_HPP_
#define GAMEDEC_STP_HPP_

#include "gamedec/matrix.hpp"

namespace gamedec {

// i-th column of I_n as an n-by-1 matrix, i being 1-based.
RatMatrix delta(int n, int i);

// Semi-tensor product: with t = lcm(cols(a), rows(b)),
//   a ⋉ b = (a ⊗ I_{t/cols(a)}) (b ⊗ I_{t/rows(b)}).
// Total on all shapes; coincides with the ordinary product when the inner
// dimensions already match.
RatMatrix stp(const RatMatrix& a, const RatMatrix& b);

}  // namespace gamedec

#endif  // GAMEDEC_STP_HPP_
