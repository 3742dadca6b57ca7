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
//
// End-to-end acceptance gate. Every check is exact rational arithmetic with
// zero tolerance; one [PASS]/[FAIL] line is printed per criterion and the
// process exits nonzero when any criterion fails.

#include <sys/wait.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gamedec/classify.hpp"
#include "gamedec/compat.hpp"
#include "gamedec/errors.hpp"
#include "gamedec/game.hpp"
#include "gamedec/inner_product.hpp"
#include "gamedec/json_io.hpp"
#include "gamedec/linalg.hpp"
#include "gamedec/random_game.hpp"
#include "gamedec/scheme.hpp"
#include "gamedec/subspace.hpp"
#include "oracles.hpp"

namespace {

using gamedec::Game;
using gamedec::GameSpace;
using gamedec::InnerProduct;
using gamedec::Rat;
using gamedec::RatMatrix;
using gamedec::Scheme;
using gamedec::SchemeName;
using gamedec::Subspace;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion
            << ": " << detail << std::endl;
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// 1. Golden payoff vector of the worked three-player example.

void criterion_1(const std::string& data_dir) {
  const std::vector<long> expected = {26, 9, 12, 4,  14, 6, 14, 6,  //
                                      -5, -5, 2,  2,  2,  2, 4,  4,  //
                                      18, 10, 4,  5,  7,  8, 7,  8};
  try {
    Game g = gamedec::game_from_json(
        gamedec::load_json(data_dir + "/example21.json"));
    bool ok = g.space().signature() == "G[3;2,2,2]" &&
              g.v().size() == expected.size();
    int exact = 0;
    if (ok) {
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (g.v()[i] == Rat(expected[i])) ++exact;
      }
      ok = exact == static_cast<int>(expected.size());
    }
    report(1, ok,
           "golden payoff vector: " + std::to_string(exact) + "/" +
               std::to_string(expected.size()) + " entries exact on " +
               g.space().signature());
  } catch (const std::exception& ex) {
    report(1, false, std::string("golden payoff vector: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------
// 2. Dimension suite over the three reference spaces.

void criterion_2() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& ks : {std::vector<int>{2, 2}, std::vector<int>{2, 3},
                         std::vector<int>{2, 2, 2}}) {
    GameSpace space(ks);
    const long long n = space.players();
    const long long k = space.profiles();
    long long dim_l = 0;
    long long dim_e = 0;
    for (int i = 1; i <= space.players(); ++i) {
      dim_l += (space.strategy_count(i) - 1) * (k / space.strategy_count(i));
      dim_e += k / space.strategy_count(i);
    }
    const long long z = gamedec::zero_sum_space(space).dim();
    const long long c = gamedec::common_interest_space(space).dim();
    const long long l = gamedec::normalized_space(space).dim();
    const long long e = gamedec::non_strategic_space(space).dim();
    if (z != (n - 1) * k || c != k || l != dim_l || e != dim_e ||
        z + c != space.dim() || l + e != space.dim()) {
      ok = false;
      detail << space.signature() << " dimensions wrong; ";
    }
  }
  GameSpace small({2, 2});
  if (gamedec::harmonic_space(small).dim() != 1) {
    ok = false;
    detail << "dim H on G[2;2,2] != 1; ";
  }
  if (gamedec::potential_space(small).dim() != 7) {
    ok = false;
    detail << "dim potential on G[2;2,2] != 7; ";
  }
  const Scheme zsep = gamedec::build_scheme(SchemeName::kZsep, small,
                                            InnerProduct::standard(small));
  if (zsep.parts().size() != 3 || zsep.parts()[0].dim() != 1 ||
      zsep.parts()[1].dim() != 6 || zsep.parts()[2].dim() != 1) {
    ok = false;
    detail << "zsep dims on G[2;2,2] != (1,6,1); ";
  }
  if (ok) {
    detail << "Z/C/L/E closed forms, complements, H=1, potential=7, "
              "zsep=(1,6,1) all exact on 3 spaces";
  }
  report(2, ok, "dimension suite: " + detail.str());
}

// ---------------------------------------------------------------------------
// 3. Reconstruction and exact membership over 500 seeded games per pair.

void criterion_3() {
  const int kGames = 500;
  bool ok = true;
  int pairs = 0;
  long long decompositions = 0;
  std::ostringstream detail;
  std::uint64_t master = 300;
  for (const auto& ks : {std::vector<int>{2, 2}, std::vector<int>{2, 3},
                         std::vector<int>{2, 2, 2}}) {
    GameSpace space(ks);
    InnerProduct plain = InnerProduct::standard(space);
    for (SchemeName name : gamedec::all_scheme_names()) {
      if (name == SchemeName::kSymmetry && !space.equal_strategy_counts()) {
        continue;  // the symmetry split is undefined on unequal counts
      }
      ++master;
      ++pairs;
      const Scheme scheme = gamedec::build_scheme(name, space, plain);
      const gamedec::Decomposer decomposer(scheme, plain);
      // Independent membership check: the span projector fixes exactly the
      // part's members.
      std::vector<RatMatrix> span_projectors;
      for (const Subspace& part : scheme.parts()) {
        span_projectors.push_back(gamedec::projector(plain, part));
      }
      for (int t = 0; t < kGames && ok; ++t) {
        Game g = gamedec::random_game(
            space, gamedec::derive_seed(master, static_cast<std::uint64_t>(t)));
        gamedec::Decomposition d = decomposer.decompose(g);
        Game total = Game::zero(space);
        for (std::size_t j = 0; j < d.components.size(); ++j) {
          total = total + d.components[j];
          const std::vector<Rat> fixed =
              span_projectors[j] * d.components[j].v();
          if (!(fixed == d.components[j].v())) {
            ok = false;
            detail << "component outside its part: " << to_string(name)
                   << " on " << space.signature() << " part " << j + 1
                   << " trial " << t + 1 << "; ";
          }
        }
        if (!(total == g)) {
          ok = false;
          detail << "components do not sum to input: " << to_string(name)
                 << " on " << space.signature() << " trial " << t + 1 << "; ";
        }
        ++decompositions;
      }
    }
  }
  if (ok) {
    detail << std::to_string(decompositions) << " decompositions over "
           << pairs
           << " scheme/space pairs (symmetry undefined on G[2;2,3]): exact "
              "sums, exact membership";
  }
  report(3, ok, "reconstruction & membership: " + detail.str());
}

// ---------------------------------------------------------------------------
// 4. Equivalence of compatibility with orthogonality + projection agreement.

void criterion_4() {
  const int kTrials = 100;
  bool ok = true;
  std::ostringstream detail;

  {
    GameSpace cube({2, 2, 2});
    gamedec::TheoremReport r =
        gamedec::theorem_check(SchemeName::kPotential, cube,
                               InnerProduct::candogan(cube), kTrials, 1);
    if (!(r.theorem_holds && r.compat.compatible && r.orthogonal_standard &&
          r.orthogonal_weighted && r.projections_agree &&
          !r.witness.has_value())) {
      ok = false;
      detail << "(potential, candogan, G[3;2,2,2]) expected full agreement; ";
    }
  }
  {
    GameSpace uneven({2, 3});
    gamedec::TheoremReport r =
        gamedec::theorem_check(SchemeName::kZeroSum, uneven,
                               InnerProduct::candogan(uneven), kTrials, 1);
    bool case_ok = r.theorem_holds && !r.compat.compatible &&
                   !r.orthogonal_weighted && !r.projections_agree &&
                   r.witness.has_value() && r.witness_trial >= 1 &&
                   r.witness_trial <= kTrials;
    if (case_ok) {
      // The witness must be a concrete disagreement: some part's projection
      // differs between the two inner products.
      const Scheme scheme = gamedec::build_scheme(
          SchemeName::kZeroSum, uneven, InnerProduct::standard(uneven));
      bool differs = false;
      for (const Subspace& part : scheme.parts()) {
        if (!(gamedec::project(InnerProduct::standard(uneven), part,
                               *r.witness) ==
              gamedec::project(InnerProduct::candogan(uneven), part,
                               *r.witness))) {
          differs = true;
        }
      }
      case_ok = differs;
    }
    if (!case_ok) {
      ok = false;
      detail << "(zero-sum, candogan, G[2;2,3]) expected incompatibility "
                "with a disagreement witness; ";
    }
  }
  {
    GameSpace small({2, 2});
    gamedec::TheoremReport r =
        gamedec::theorem_check(SchemeName::kZeroSum, small,
                               InnerProduct::candogan(small), kTrials, 1);
    if (!(r.theorem_holds && r.compat.compatible && r.projections_agree)) {
      ok = false;
      detail << "(zero-sum, candogan, G[2;2,2]) expected compatibility; ";
    }
  }
  if (ok) {
    detail << "3 cases x " << kTrials
           << " trials: compatibility <=> orthogonality + exact projection "
              "agreement";
  }
  report(4, ok, "theorem equivalence: " + detail.str());
}

// ---------------------------------------------------------------------------
// 5. Weighted pairing of zero-sum and common-interest basis vectors.

void criterion_5() {
  bool ok = true;
  std::ostringstream detail;

  GameSpace uneven({2, 3});
  InnerProduct uneven_weight = InnerProduct::candogan(uneven);
  Subspace z = gamedec::zero_sum_space(uneven);
  Subspace c = gamedec::common_interest_space(uneven);
  int z_col = -1;
  int c_col = -1;
  for (int a = 0; a < z.dim() && z_col < 0; ++a) {
    for (int b = 0; b < c.dim(); ++b) {
      if (gamedec::inner(uneven_weight, z.basis().column(a),
                         c.basis().column(b)) != 0) {
        z_col = a;
        c_col = b;
        break;
      }
    }
  }
  if (z_col < 0) {
    ok = false;
    detail << "no nonzero pairing found on G[2;2,3]; ";
  } else {
    detail << "G[2;2,3]: <z[" << z_col + 1 << "], c[" << c_col + 1
           << "]> != 0 under candogan; ";
  }

  GameSpace even({2, 2});
  InnerProduct even_weight = InnerProduct::candogan(even);
  Subspace ze = gamedec::zero_sum_space(even);
  Subspace ce = gamedec::common_interest_space(even);
  int nonzero = 0;
  for (int a = 0; a < ze.dim(); ++a) {
    for (int b = 0; b < ce.dim(); ++b) {
      if (gamedec::inner(even_weight, ze.basis().column(a),
                         ce.basis().column(b)) != 0) {
        ++nonzero;
      }
    }
  }
  if (nonzero != 0) {
    ok = false;
    detail << "G[2;2,2]: found " << nonzero << " nonzero pairings; ";
  } else {
    detail << "G[2;2,2]: all " << ze.dim() * ce.dim()
           << " basis pairs orthogonal";
  }
  report(5, ok, "weighted pairing instance: " + detail.str());
}

// ---------------------------------------------------------------------------
// 6. Potential predicate against the independent four-cycle oracle.

void criterion_6() {
  GameSpace space({2, 2});
  Subspace pot = gamedec::potential_space(space);
  bool ok = true;
  int with_potential = 0;
  int without_potential = 0;
  std::ostringstream detail;
  for (int t = 0; t < 200 && ok; ++t) {
    // Even trials draw from the whole space, odd trials from the potential
    // subspace, so both verdicts appear in the sample.
    Game g = (t % 2 == 0)
                 ? gamedec::random_game(
                       space, gamedec::derive_seed(600, static_cast<std::uint64_t>(t)))
                 : gamedec::random_member(
                       pot, gamedec::derive_seed(601, static_cast<std::uint64_t>(t)));
    gamedec::Classification result = gamedec::classify(g);
    const bool claimed = result.has(gamedec::GameClass::kPotential);
    if (claimed != oracles::potential_by_cycles(g)) {
      ok = false;
      detail << "verdict disagrees with the four-cycle oracle at trial "
             << t + 1 << "; ";
      break;
    }
    if (claimed) {
      ++with_potential;
      if (!result.potential_witness.has_value() ||
          !oracles::witness_matches(g, *result.potential_witness)) {
        ok = false;
        detail << "witness fails the exhaustive switch identity at trial "
               << t + 1 << "; ";
        break;
      }
    } else {
      ++without_potential;
    }
  }
  if (ok && (with_potential == 0 || without_potential == 0)) {
    ok = false;
    detail << "sample did not contain both verdicts; ";
  }
  if (ok) {
    detail << "200 games on G[2;2,2]: " << with_potential
           << " with / " << without_potential
           << " without a potential; all verdicts and witnesses exact";
  }
  report(6, ok, "potential predicate vs cycle oracle: " + detail.str());
}

// ---------------------------------------------------------------------------
// 7. Projection laws on 100 seeded (subspace, game, weight) triples/space.

void criterion_7() {
  bool ok = true;
  long long triples = 0;
  std::ostringstream detail;
  for (const auto& ks : {std::vector<int>{2, 2}, std::vector<int>{2, 3},
                         std::vector<int>{2, 2, 2}}) {
    GameSpace space(ks);
    gamedec::Rng rng(700 + space.players() * 10 +
                     space.strategy_count(space.players()));
    std::vector<Subspace> family = {
        gamedec::zero_sum_space(space), gamedec::common_interest_space(space),
        gamedec::normalized_space(space),
        gamedec::non_strategic_space(space), gamedec::harmonic_space(space),
        gamedec::potential_space(space)};
    if (space.equal_strategy_counts()) {
      family.push_back(gamedec::symmetric_space(space));
    }
    for (int t = 0; t < 100 && ok; ++t) {
      const Subspace& s = family[t % family.size()];
      InnerProduct ip =
          (t % 3 == 0)
              ? InnerProduct::standard(space)
              : (t % 3 == 1)
                    ? InnerProduct::candogan(space)
                    : InnerProduct(space,
                                   gamedec::random_spd_matrix(
                                       static_cast<int>(space.dim()), &rng));
      Game x = gamedec::random_game(space, &rng);
      Game y = gamedec::random_game(space, &rng);
      Game px = gamedec::project(ip, s, x);
      if (!(gamedec::project(ip, s, px) == px)) {
        ok = false;
        detail << "idempotence fails on " << space.signature() << " trial "
               << t + 1 << "; ";
      }
      if (!(gamedec::inner(ip, px, y) ==
            gamedec::inner(ip, x, gamedec::project(ip, s, y)))) {
        ok = false;
        detail << "self-adjointness fails on " << space.signature()
               << " trial " << t + 1 << "; ";
      }
      if (!gamedec::same_span(
              gamedec::orth_complement(gamedec::orth_complement(s, ip), ip),
              s)) {
        ok = false;
        detail << "double complement fails on " << space.signature()
               << " trial " << t + 1 << "; ";
      }
      ++triples;
    }
  }
  if (ok) {
    detail << triples
           << " triples: idempotence, self-adjointness, double complement "
              "all exact";
  }
  report(7, ok, "projection laws: " + detail.str());
}

// ---------------------------------------------------------------------------
// 8. CLI contract: exit codes and byte-exact determinism.

int run_cli(const std::string& cli, const std::string& args,
            const std::string& stdout_file) {
  const std::string command = "'" + cli + "' " + args + " > " + stdout_file +
                              " 2> /dev/null";
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void criterion_8(const std::string& cli) {
  bool ok = true;
  std::ostringstream detail;

  const int code_potential = run_cli(
      cli, "check --scheme potential --inner candogan --space 2,2,2",
      "acceptance_check1.json");
  if (code_potential != 0) {
    ok = false;
    detail << "check potential/candogan/2,2,2 exited " << code_potential
           << ", expected 0; ";
  }
  const int code_zero_sum = run_cli(
      cli, "check --scheme zero-sum --inner candogan --space 2,3",
      "acceptance_check2.json");
  if (code_zero_sum != 2) {
    ok = false;
    detail << "check zero-sum/candogan/2,3 exited " << code_zero_sum
           << ", expected 2; ";
  }
  const int code_small = run_cli(
      cli, "check --scheme zero-sum --inner candogan --space 2,2",
      "acceptance_check3.json");
  if (code_small != 0) {
    ok = false;
    detail << "check zero-sum/candogan/2,2 exited " << code_small
           << ", expected 0; ";
  }

  const int rand_a = run_cli(cli, "random --space 2,2,2 --seed 7",
                             "acceptance_random_a.json");
  const int rand_b = run_cli(cli, "random --space 2,2,2 --seed 7",
                             "acceptance_random_b.json");
  if (rand_a != 0 || rand_b != 0) {
    ok = false;
    detail << "random --space 2,2,2 --seed 7 exited " << rand_a << "/"
           << rand_b << ", expected 0; ";
  } else {
    const std::string a = slurp("acceptance_random_a.json");
    const std::string b = slurp("acceptance_random_b.json");
    if (a.empty() || a != b) {
      ok = false;
      detail << "random output not byte-identical across runs; ";
    }
  }
  if (ok) {
    detail << "check exit codes 0/2/0; random --seed 7 byte-identical";
  }
  report(8, ok, "CLI contract: " + detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string data_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") {
      cli = argv[i + 1];
    } else if (flag == "--data") {
      data_dir = argv[i + 1];
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  if (cli.empty() || data_dir.empty()) {
    std::cerr << "usage: acceptance --cli PATH --data DIR\n";
    return 2;
  }

  try {
    criterion_1(data_dir);
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(cli);
  } catch (const std::exception& ex) {
    std::cout << "[FAIL] unexpected error: " << ex.what() << std::endl;
    ++g_failures;
  }

  if (g_failures == 0) {
    std::cout << "acceptance: all 8 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criterion(s) failed"
            << std::endl;
  return 1;
}
