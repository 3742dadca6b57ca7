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

#ifndef GAMEDEC_ERRORS_HPP_
#define GAMEDEC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gamedec {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files or tokens (JSON, rational literals, CLI payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Shape or ambient-space mismatches between otherwise valid values.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Valid shapes, invalid content: out-of-range profiles, non-SPD weights,
// unsupported spaces, singular user matrices.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Violated internal invariants. Seeing one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace gamedec

#endif  // GAMEDEC_ERRORS_HPP_
