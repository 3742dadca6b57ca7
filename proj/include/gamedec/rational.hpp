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

#ifndef GAMEDEC_RATIONAL_HPP_
#define GAMEDEC_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gamedec {

// Exact rational scalar. All core arithmetic runs on these; floating point
// never enters the library.
using Rat = mpq_class;

// Canonicalized p/q from machine integers. mpq_class(p, q) alone does not
// reduce the fraction, so always go through here.
Rat make_rat(long num, long den = 1);

// Accepts "p", "p/q", and decimal literals with optional exponent
// ("-2.5e-1" == -1/4). Conversion is exact; throws ParseError on anything
// else, including a zero denominator.
Rat rat_from_string(std::string_view text);

// "p" when the value is integral, "p/q" otherwise.
std::string rat_to_string(const Rat& value);

std::string rat_vector_to_string(const std::vector<Rat>& values);

}  // namespace gamedec

#endif  // GAMEDEC_RATIONAL_HPP_
