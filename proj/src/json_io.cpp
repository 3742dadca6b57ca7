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

#include "gamedec/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <utility>
#include <vector>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

// DOM builder that diverts float tokens into strings before any double
// conversion happens, so "0.1" survives as the exact text "0.1".
class ExactNumberSax {
 public:
  explicit ExactNumberSax(Json* root) : dom_(*root, /*allow_exceptions_=*/true) {}

  bool null() { return dom_.null(); }
  bool boolean(bool v) { return dom_.boolean(v); }
  bool number_integer(Json::number_integer_t v) {
    return dom_.number_integer(v);
  }
  bool number_unsigned(Json::number_unsigned_t v) {
    return dom_.number_unsigned(v);
  }
  bool number_float(Json::number_float_t, const std::string& raw) {
    std::string text = raw;
    return dom_.string(text);
  }
  bool string(std::string& v) { return dom_.string(v); }
  bool binary(Json::binary_t& v) { return dom_.binary(v); }
  bool start_object(std::size_t n) { return dom_.start_object(n); }
  bool key(std::string& v) { return dom_.key(v); }
  bool end_object() { return dom_.end_object(); }
  bool start_array(std::size_t n) { return dom_.start_array(n); }
  bool end_array() { return dom_.end_array(); }
  template <class Exception>
  bool parse_error(std::size_t pos, const std::string& token,
                   const Exception& ex) {
    return dom_.parse_error(pos, token, ex);
  }

 private:
  nlohmann::detail::json_sax_dom_parser<Json> dom_;
};

const Json& require_field(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field)) {
    throw ParseError(std::string("missing required field \"") + field + "\"");
  }
  return j.at(field);
}

int int_field(const Json& v, const char* field) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ParseError(std::string("field \"") + field + "\" must be an integer");
  }
  return v.get<int>();
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json root;
  ExactNumberSax sax(&root);
  try {
    Json::sax_parse(text, &sax);
  } catch (const nlohmann::detail::exception& ex) {
    throw ParseError(ex.what());
  }
  return root;
}

std::string read_text_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

Json load_json(const std::string& path) {
  try {
    return parse_json_text(read_text_input(path));
  } catch (const ParseError& ex) {
    throw ParseError((path == "-" ? std::string("stdin") : path) + ": " +
                     ex.what());
  }
}

Rat rat_from_json(const Json& v) {
  if (v.is_number_unsigned()) {
    return rat_from_string(std::to_string(v.get<std::uint64_t>()));
  }
  if (v.is_number_integer()) {
    return rat_from_string(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    return rat_from_string(v.get<std::string>());
  }
  if (v.is_number_float()) {
    // parse_json_text never produces these; a hand-built document with a
    // double has already lost exactness.
    throw ParseError("floating-point values are not accepted; write the "
                     "number as a string");
  }
  throw ParseError("expected a number or rational string, got " +
                   std::string(v.type_name()));
}

Json rat_to_json(const Rat& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) {
    return Json(static_cast<std::int64_t>(v.get_num().get_si()));
  }
  return Json(rat_to_string(v));
}

Game game_from_json(const Json& j) {
  const int players = int_field(require_field(j, "players"), "players");
  const Json& strategies = require_field(j, "strategies");
  if (!strategies.is_array()) {
    throw ParseError("field \"strategies\" must be an array");
  }
  std::vector<int> ks;
  ks.reserve(strategies.size());
  for (const Json& v : strategies) ks.push_back(int_field(v, "strategies"));
  if (players != static_cast<int>(ks.size())) {
    throw ParseError("\"players\" is " + std::to_string(players) +
                     " but \"strategies\" lists " + std::to_string(ks.size()) +
                     " entries");
  }
  const GameSpace space{ks};
  const Json& payoffs = require_field(j, "payoffs");
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != players) {
    throw ParseError("field \"payoffs\" must list one row per player");
  }
  std::vector<std::vector<Rat>> rows;
  rows.reserve(payoffs.size());
  for (const Json& row : payoffs) {
    if (!row.is_array() ||
        static_cast<long long>(row.size()) != space.profiles()) {
      throw ParseError("each payoff row must have " +
                       std::to_string(space.profiles()) + " entries");
    }
    std::vector<Rat> values;
    values.reserve(row.size());
    for (const Json& v : row) values.push_back(rat_from_json(v));
    rows.push_back(std::move(values));
  }
  return from_table(space, rows);
}

Json game_to_json(const Game& g) {
  Json j = Json::object();
  j["players"] = g.space().players();
  j["strategies"] = g.space().strategy_counts();
  Json payoffs = Json::array();
  for (const std::vector<Rat>& row : to_table(g)) {
    Json out_row = Json::array();
    for (const Rat& v : row) out_row.push_back(rat_to_json(v));
    payoffs.push_back(std::move(out_row));
  }
  j["payoffs"] = std::move(payoffs);
  return j;
}

InnerProduct weight_from_json(const Json& j, const GameSpace& space,
                              const std::string& name) {
  if (j.is_object() && j.contains("preset")) {
    const std::string preset = require_field(j, "preset").get<std::string>();
    if (preset == "standard") return InnerProduct::standard(space);
    if (preset == "candogan") return InnerProduct::candogan(space);
    throw ParseError("unknown weight preset \"" + preset + "\"");
  }
  const int dim = int_field(require_field(j, "dim"), "dim");
  if (static_cast<long long>(dim) != space.dim()) {
    throw ParseError("weight dim " + std::to_string(dim) +
                     " does not match space dimension " +
                     std::to_string(space.dim()));
  }
  const Json& rows = require_field(j, "q");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError("field \"q\" must list " + std::to_string(dim) + " rows");
  }
  RatMatrix q(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const Json& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("weight row " + std::to_string(r + 1) + " must have " +
                       std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) q(r, c) = rat_from_json(row.at(c));
  }
  return InnerProduct(space, std::move(q), name);
}

InnerProduct weight_from_spec(const std::string& spec, const GameSpace& space) {
  if (spec == "standard") return InnerProduct::standard(space);
  if (spec == "candogan") return InnerProduct::candogan(space);
  const std::string prefix = "file:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string path = spec.substr(prefix.size());
    return weight_from_json(load_json(path), space, spec);
  }
  throw ParseError("unknown weight \"" + spec +
                   "\"; expected standard, candogan, or file:PATH");
}

Json subspace_to_json(const Subspace& s) {
  Json j = Json::object();
  j["space"] = s.space().strategy_counts();
  j["dimension"] = s.dim();
  Json basis = Json::array();
  for (int c = 0; c < s.dim(); ++c) {
    Json column = Json::array();
    for (int r = 0; r < s.basis().rows(); ++r) {
      column.push_back(rat_to_string(s.basis()(r, c)));
    }
    basis.push_back(std::move(column));
  }
  j["basis"] = std::move(basis);
  return j;
}

Json classification_to_json(const Game& g, const Classification& c) {
  Json j = Json::object();
  j["signature"] = g.space().signature();
  j["strategies"] = g.space().strategy_counts();
  Json classes = Json::array();
  for (GameClass gc : c.classes) classes.push_back(to_string(gc));
  j["classes"] = std::move(classes);
  j["symmetry_checked"] = c.symmetry_checked;
  if (c.potential_witness) {
    Json witness = Json::array();
    for (const Rat& v : *c.potential_witness) witness.push_back(rat_to_json(v));
    j["potential_witness"] = std::move(witness);
  } else {
    j["potential_witness"] = nullptr;
  }
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j = Json::object();
  j["scheme"] = to_string(d.scheme);
  j["inner"] = d.weight_name;
  Json components = Json::array();
  for (const Game& c : d.components) components.push_back(game_to_json(c));
  j["components"] = std::move(components);
  j["orthogonal"] = d.orthogonal;
  j["parts"] = d.part_names;
  return j;
}

Json theorem_report_to_json(const TheoremReport& r) {
  Json j = Json::object();
  j["scheme"] = to_string(r.compat.scheme);
  j["weight"] = r.compat.weight_name;
  j["compatible"] = r.compat.compatible;
  Json violations = Json::array();
  for (const CompatViolation& v : r.compat.violations) {
    Json entry = Json::object();
    entry["part"] = v.part;
    entry["column"] = v.column;
    entry["direction"] = v.direction;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  j["orthogonal_standard"] = r.orthogonal_standard;
  j["orthogonal_weighted"] = r.orthogonal_weighted;
  Json agreement = Json::object();
  agreement["trials"] = r.trials;
  agreement["seed"] = r.seed;
  agreement["all_equal"] = r.projections_agree;
  if (r.witness) {
    agreement["witness"] = game_to_json(*r.witness);
    agreement["witness_trial"] = r.witness_trial;
  } else {
    agreement["witness"] = nullptr;
  }
  j["agreement"] = std::move(agreement);
  j["theorem_holds"] = r.theorem_holds;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gamedec
