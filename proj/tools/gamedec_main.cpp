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

// Command-line surface over the gamedec library.
//
//   gamedec info GAME             summary: signature, payoff vector, classes
//   gamedec classify GAME         classification as JSON
//   gamedec decompose GAME ...    split a game along a scheme
//   gamedec check ...             compatibility and invariance report
//   gamedec random ...            seeded random game generation
//
// Exit codes: 0 success (and "compatible" for check), 1 usage, parse, or
// construction errors, 2 check ran and reported incompatible.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gamedec/classify.hpp"
#include "gamedec/compat.hpp"
#include "gamedec/errors.hpp"
#include "gamedec/game.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/json_io.hpp"
#include "gamedec/random_game.hpp"
#include "gamedec/rational.hpp"
#include "gamedec/scheme.hpp"
#include "gamedec/subspace.hpp"

namespace {

using gamedec::Game;
using gamedec::GameSpace;
using gamedec::InnerProduct;
using gamedec::Json;
using gamedec::Rat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIncompatible = 2;

constexpr int kDefaultTrials = 100;
constexpr std::uint64_t kDefaultSeed = 1;

Game load_game(const std::string& path) {
  return gamedec::game_from_json(gamedec::load_json(path));
}

gamedec::SchemeName parse_scheme(const std::string& name) {
  const auto scheme = gamedec::scheme_name_from_string(name);
  if (!scheme) {
    throw gamedec::ParseError(
        "unknown scheme \"" + name +
        "\"; expected potential, zero-sum, normalization, zsep, or symmetry");
  }
  return *scheme;
}

int cmd_info(const std::string& game_file) {
  const Game g = load_game(game_file);
  const gamedec::Classification c = gamedec::classify(g);
  std::cout << g.space().signature() << "\n";
  std::cout << "V_G = " << gamedec::rat_vector_to_string(g.v()) << "\n";
  for (gamedec::GameClass gc : gamedec::all_game_classes()) {
    if (gc == gamedec::GameClass::kSymmetric && !c.symmetry_checked) {
      std::cout << "symmetric: skipped (requires equal strategy counts and "
                << "few players)\n";
      continue;
    }
    std::cout << gamedec::to_string(gc) << ": " << (c.has(gc) ? "yes" : "no")
              << "\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& game_file) {
  const Game g = load_game(game_file);
  std::cout << gamedec::dump_json(
      gamedec::classification_to_json(g, gamedec::classify(g)));
  return kExitOk;
}

int cmd_decompose(const std::string& game_file, const std::string& scheme_name,
                  const std::string& inner_spec, const std::string& out_file) {
  const Game g = load_game(game_file);
  const InnerProduct ip = gamedec::weight_from_spec(inner_spec, g.space());
  const gamedec::Scheme scheme =
      gamedec::build_scheme(parse_scheme(scheme_name), g.space(), ip);
  const gamedec::Decomposition d = gamedec::decompose(scheme, ip, g);
  const std::string json_text = gamedec::dump_json(decomposition_to_json(d));

  // The JSON goes to the named file, or to stdout when no file was given;
  // the human-readable summary goes to whichever stream is left.
  std::ostream& summary = out_file.empty() ? std::cerr : std::cout;
  for (size_t j = 0; j < d.components.size(); ++j) {
    const Rat norm2 = inner(ip, d.components[j], d.components[j]);
    summary << d.part_names[j] << ": |v|^2 = " << gamedec::rat_to_string(norm2)
            << "\n";
  }
  summary << "orthogonal under " << ip.name() << ": "
          << (d.orthogonal ? "yes" : "no") << "\n";
  if (out_file.empty()) {
    std::cout << json_text;
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw gamedec::Error("cannot write " + out_file);
    out << json_text;
  }
  return kExitOk;
}

int cmd_check(const std::vector<int>& ks, const std::string& scheme_name,
              const std::string& inner_spec, int trials, std::uint64_t seed) {
  const GameSpace space(ks);
  const InnerProduct ip = gamedec::weight_from_spec(inner_spec, space);
  const gamedec::TheoremReport report = gamedec::theorem_check(
      parse_scheme(scheme_name), space, ip, trials, seed);
  std::cout << gamedec::dump_json(gamedec::theorem_report_to_json(report));
  return report.compat.compatible ? kExitOk : kExitIncompatible;
}

int cmd_random(const std::vector<int>& ks, std::uint64_t seed,
               const std::string& in_class) {
  const GameSpace space(ks);
  Game g = Game::zero(space);
  if (in_class.empty()) {
    g = gamedec::random_game(space, seed);
  } else {
    const auto game_class = gamedec::game_class_from_string(in_class);
    if (!game_class) {
      throw gamedec::ParseError("unknown class \"" + in_class + "\"");
    }
    g = gamedec::random_member(gamedec::class_space(*game_class, space), seed);
  }
  std::cout << gamedec::dump_json(gamedec::game_to_json(g));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational decomposition of finite games"};
  app.require_subcommand(1);

  std::string game_file;
  std::string scheme_name;
  std::string inner_spec = "standard";
  std::string out_file;
  std::string in_class;
  std::vector<int> ks;
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;

  CLI::App* info = app.add_subcommand("info", "print a game summary");
  info->add_option("game-file", game_file, "game JSON file, or - for stdin")
      ->required();

  CLI::App* classify =
      app.add_subcommand("classify", "print the classification as JSON");
  classify->add_option("game-file", game_file, "game JSON file, or - for stdin")
      ->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "split a game along a scheme");
  decompose->add_option("game-file", game_file, "game JSON file, or - for stdin")
      ->required();
  decompose
      ->add_option("--scheme", scheme_name,
                   "potential, zero-sum, normalization, zsep, or symmetry")
      ->required();
  decompose->add_option("--inner", inner_spec,
                        "standard, candogan, or file:Q.json");
  decompose->add_option("-o", out_file, "write the decomposition JSON here");

  CLI::App* check =
      app.add_subcommand("check", "compatibility and invariance report");
  check
      ->add_option("--scheme", scheme_name,
                   "potential, zero-sum, normalization, zsep, or symmetry")
      ->required();
  check->add_option("--inner", inner_spec, "standard, candogan, or file:Q.json");
  check->add_option("--space", ks, "strategy counts, e.g. 2,2,3")
      ->required()
      ->delimiter(',');
  check->add_option("--trials", trials, "random games for the agreement test");
  check->add_option("--seed", seed, "seed for the agreement test");

  CLI::App* random = app.add_subcommand("random", "generate a seeded game");
  random->add_option("--space", ks, "strategy counts, e.g. 2,2,3")
      ->required()
      ->delimiter(',');
  random->add_option("--seed", seed, "generator seed")->required();
  random->add_option("--in-class", in_class,
                     "sample from this class subspace instead of the whole "
                     "space");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (info->parsed()) return cmd_info(game_file);
    if (classify->parsed()) return cmd_classify(game_file);
    if (decompose->parsed()) {
      return cmd_decompose(game_file, scheme_name, inner_spec, out_file);
    }
    if (check->parsed()) {
      return cmd_check(ks, scheme_name, inner_spec, trials, seed);
    }
    if (random->parsed()) return cmd_random(ks, seed, in_class);
  } catch (const gamedec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
