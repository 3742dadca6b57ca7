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

#ifndef GAMEDEC_JSON_IO_HPP_
#define GAMEDEC_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "gamedec/classify.hpp"
#include "gamedec/compat.hpp"
#include "gamedec/game.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/rational.hpp"
#include "gamedec/scheme.hpp"
#include "gamedec/subspace.hpp"

namespace gamedec {

// Field order in emitted documents follows construction order.
using Json = nlohmann::ordered_json;

// Parses JSON keeping numbers exact: integer tokens stay integers, and any
// token the standard parser would turn into a double (decimals, exponents,
// oversized integers) is kept as its raw text and converted with
// rat_from_string on access. Throws ParseError with line/column context.
Json parse_json_text(const std::string& text);

// Reads a file, or standard input when the path is "-".
std::string read_text_input(const std::string& path);

// parse_json_text over read_text_input, with the path in error messages.
Json load_json(const std::string& path);

// Accepts integers, rational strings "p/q", and exact decimal strings.
Rat rat_from_json(const Json& v);

// Integers that fit a 64-bit signed value are emitted as JSON numbers,
// everything else as a "p/q" string.
Json rat_to_json(const Rat& v);

// { "players": n, "strategies": [k1,...,kn], "payoffs": [[...] x n] }
Game game_from_json(const Json& j);
Json game_to_json(const Game& g);

// { "dim": m, "q": [[...] x m] } or { "preset": "standard" | "candogan" }.
InnerProduct weight_from_json(const Json& j, const GameSpace& space,
                              const std::string& name = "custom");

// Resolves a command-line weight argument: "standard", "candogan", or
// "file:PATH" pointing at weight JSON. The resulting weight is named after
// the argument, so reports echo what was requested.
InnerProduct weight_from_spec(const std::string& spec, const GameSpace& space);

// { "space": [k1,...,kn], "dimension": d, "basis": [column x d] } with
// every entry a rational string.
Json subspace_to_json(const Subspace& s);

Json classification_to_json(const Game& g, const Classification& c);

// { "scheme", "inner", "components", "orthogonal" } plus a "parts" array
// naming each component.
Json decomposition_to_json(const Decomposition& d);

// { "scheme", "weight", "compatible", "violations", "orthogonal_standard",
//   "orthogonal_weighted", "agreement", "theorem_holds" }.
Json theorem_report_to_json(const TheoremReport& r);

// Two-space indentation and a trailing newline; byte-stable for equal
// documents.
std::string dump_json(const Json& j);

}  // namespace gamedec

#endif  // GAMEDEC_JSON_IO_HPP_
