// Copyright 2026 The qgame-iso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.h"
#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/isomorphism.h"
#include "qgi/operators.h"
#include "qgi/schemes.h"

namespace qgi {
namespace {

constexpr double kTol = 1e-9;
constexpr std::uint64_t kSeed = 20260118;

using Table = std::vector<std::vector<PayoffPair>>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every isomorphism met in criteria 1, 6, 7 and 8, for the equilibrium check.
struct FoundIsomorphism {
  BimatrixGame g;
  BimatrixGame g2;
  StrongIsomorphism f;
};
std::vector<FoundIsomorphism> g_found;

void Record(const BimatrixGame& g, const BimatrixGame& g2,
            const std::vector<StrongIsomorphism>& isos) {
  for (const auto& f : isos) g_found.push_back({g, g2, f});
}

double MaxDiff(const BimatrixGame& g, const Table& t) {
  if (g.num_rows() != t.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (g.num_cols() != t[r].size()) return INFINITY;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      worst = std::max({worst, std::abs(g.at(r, c).row - t[r][c].row),
                        std::abs(g.at(r, c).col - t[r][c].col)});
    }
  }
  return worst;
}

std::string Sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", x);
  return buf;
}

std::mt19937_64 TrialRng(std::uint64_t criterion, std::uint64_t trial) {
  std::seed_seq seq{std::uint32_t(kSeed), std::uint32_t(criterion),
                    std::uint32_t(trial)};
  return std::mt19937_64(seq);
}

BimatrixGame RandomRealGame(std::size_t rows, std::size_t cols,
                            std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<PayoffPair> p(rows * cols);
  for (auto& x : p) x = {u(rng), u(rng)};
  std::vector<std::string> rl, cl;
  for (std::size_t r = 0; r < rows; ++r) rl.push_back("r" + std::to_string(r));
  for (std::size_t c = 0; c < cols; ++c) cl.push_back("c" + std::to_string(c));
  return BimatrixGame(rl, cl, p);
}

// Displayed output games.
const Table kGammaQ1 = {
    {{6, 6}, {2, 7}, {6, 6}, {2, 7}},
    {{7, 2}, {0, 0}, {7, 2}, {0, 0}},
    {{6, 6}, {2, 7}, {5, 5}, {8.0 / 3, 13.0 / 3}},
    {{7, 2}, {0, 0}, {13.0 / 3, 8.0 / 3}, {3, 3}},
};
const Table kGammaQ2 = {
    {{2, 7}, {6, 6}, {2, 7}, {6, 6}},
    {{0, 0}, {7, 2}, {0, 0}, {7, 2}},
    {{2, 7}, {6, 6}, {8.0 / 3, 13.0 / 3}, {5, 5}},
    {{0, 0}, {7, 2}, {3, 3}, {13.0 / 3, 8.0 / 3}},
};
const Table kCorrelatedQ1 = {
    {{6, 6}, {2, 7}, {14.0 / 3, 19.0 / 3}},
    {{7, 2}, {0, 0}, {14.0 / 3, 4.0 / 3}},
    {{19.0 / 3, 14.0 / 3}, {4.0 / 3, 14.0 / 3}, {5, 5}},
};
const Table kCorrelatedQ2 = {
    {{2, 7}, {6, 6}, {10.0 / 3, 20.0 / 3}},
    {{0, 0}, {7, 2}, {7.0 / 3, 2.0 / 3}},
    {{4.0 / 3, 14.0 / 3}, {19.0 / 3, 14.0 / 3}, {8.0 / 3, 13.0 / 3}},
};
const Table kIqbalQ = {{{7, 2}, {2, 5}, {6, 0}}, {{6, 7}, {5, 6}, {7, 6}}};
const Table kIqbalQPrime = {{{6, 0}, {5, 2}, {7, 2}},
                            {{7, 6}, {2, 0}, {6, 7}}};
const Table kCyclicQ = {{{7, 2}, {0, 3}, {5, 2}}, {{6, 7}, {4, 6}, {2, 0}}};
const Table kCyclicQPrime = {{{6, 0}, {4, 2}, {2, 5}},
                             {{7, 6}, {0, 1}, {5, 6}}};
const Table kPermQ = {{{7, 2}, {6, 0}, {4, 2}, {0, 3}, {5, 2}, {2, 5}},
                      {{6, 7}, {7, 6}, {0, 1}, {4, 6}, {2, 0}, {5, 6}}};
const Table kPermQPrime = {{{6, 0}, {7, 2}, {0, 3}, {4, 2}, {2, 5}, {5, 2}},
                           {{7, 6}, {6, 7}, {4, 6}, {0, 1}, {5, 6}, {2, 0}}};

Outcome RefinedReproduction() {
  const BimatrixGame q1 =
      RefinedScheme(testing::Chicken1(), testing::Sqrt3State()).PayoffMatrix();
  const BimatrixGame q2 =
      RefinedScheme(testing::Chicken2(), testing::Sqrt3State()).PayoffMatrix();
  const double d = std::max(MaxDiff(q1, kGammaQ1), MaxDiff(q2, kGammaQ2));
  Record(q1, q2, FindIsomorphisms(q1, q2));
  return {d < kTol, "max |diff| = " + Sci(d)};
}

Outcome RefinedOracleMatchesTrace() {
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    auto rng = TrialRng(2, t);
    const BimatrixGame g = RandomRealGame(2, 2, rng);
    const StateVector psi = RandomState({2, 2}, rng);
    worst = std::max(worst, MaxPayoffDiff(RefinedScheme(g, psi).PayoffMatrix(),
                                          RefinedMatrixOracle(g, psi)));
  }
  return {worst < kTol, "100 pairs, max |oracle - trace| = " + Sci(worst)};
}

Outcome CorrelatedReproduction() {
  const BimatrixGame q1 =
      CorrelatedMatrixByTrace(testing::Chicken1(), testing::Sqrt3State());
  const BimatrixGame q2 =
      CorrelatedMatrixByTrace(testing::Chicken2(), testing::Sqrt3State());
  const double d =
      std::max(MaxDiff(q1, kCorrelatedQ1), MaxDiff(q2, kCorrelatedQ2));
  const auto ne1 = FindPureNash(q1);
  const auto ne2 = FindPureNash(q2);
  const bool ne_ok =
      ne1 == std::vector<PureProfile>{{0, 1}, {1, 0}, {2, 2}} &&
      ne2 == std::vector<PureProfile>{{0, 0}, {1, 1}};
  return {d < kTol && ne_ok, "max |diff| = " + Sci(d) + ", pure NE " +
                                 std::to_string(ne1.size()) + "/" +
                                 std::to_string(ne2.size())};
}

Outcome CorrelatedViolates() {
  const InvarianceReport r = CheckSchemeInvariance(
      {.kind = SchemeKind::kCorrelated, .state = testing::Sqrt3State()},
      testing::Chicken1(), testing::Chicken2());
  const bool ok = r.inputs_isomorphic && !r.outputs_isomorphic &&
                  r.verdict == Verdict::kViolates;
  return {ok, std::string("verdict ") + std::string(VerdictName(r.verdict))};
}

Outcome ThreeColumnReproduction() {
  const BimatrixGame g = testing::ThreeColumnGame();
  const BimatrixGame g2 = testing::ThreeColumnGamePrime();
  const StateVector psi = testing::QutritState();
  const OperatorSet pauli = IdentitySigmaOperators();
  const BimatrixGame iq1 = MwPayoffMatrix(g, psi, pauli, IqbalOperators());
  const BimatrixGame iq2 = MwPayoffMatrix(g2, psi, pauli, IqbalOperators());
  const BimatrixGame cy1 = MwPayoffMatrix(g, psi, pauli, CyclicOperators(3));
  const BimatrixGame cy2 = MwPayoffMatrix(g2, psi, pauli, CyclicOperators(3));
  const double d = std::max({MaxDiff(iq1, kIqbalQ), MaxDiff(iq2, kIqbalQPrime),
                             MaxDiff(cy1, kCyclicQ),
                             MaxDiff(cy2, kCyclicQPrime)});
  const std::string counts = std::to_string(FindPureNash(iq1).size()) + "/" +
                             std::to_string(FindPureNash(iq2).size()) + " and " +
                             std::to_string(FindPureNash(cy1).size()) + "/" +
                             std::to_string(FindPureNash(cy2).size());
  return {d < kTol && counts == "0/2 and 0/2",
          "max |diff| = " + Sci(d) + ", pure NE " + counts};
}

Outcome PermutationReproduction() {
  const StateVector psi = testing::QutritState();
  const BimatrixGame q1 = GeneralizedMwGame(testing::ThreeColumnGame(), psi,
                                            PermutationOrder::kPaired);
  const BimatrixGame q2 = GeneralizedMwGame(testing::ThreeColumnGamePrime(),
                                            psi, PermutationOrder::kPaired);
  const double d = std::max(MaxDiff(q1, kPermQ), MaxDiff(q2, kPermQPrime));
  const auto isos = FindIsomorphisms(q1, q2);
  Record(q1, q2, isos);
  // A_012 <-> A_102, A_021 <-> A_120, A_201 <-> A_210.
  const GameMapping displayed(PlayerBijection::kIdentity, {0, 1},
                              {1, 0, 3, 2, 5, 4});
  const bool found = std::any_of(isos.begin(), isos.end(), [&](const auto& f) {
    return f.mapping() == displayed;
  });
  return {d < kTol && found, "max |diff| = " + Sci(d) + ", " +
                                 std::to_string(isos.size()) +
                                 " output isomorphisms, displayed pairing " +
                                 (found ? "found" : "MISSING")};
}

Outcome InducedLiftVerifies() {
  std::size_t verified = 0, total = 0;
  const std::pair<std::size_t, std::size_t> shapes[] = {{2, 2}, {2, 3}, {3, 3}};
  for (std::size_t s = 0; s < 3; ++s) {
    const auto [rows, cols] = shapes[s];
    for (std::uint64_t t = 0; t < 200; ++t) {
      auto rng = TrialRng(70 + s, t);
      const BimatrixGame g = RandomIntegerGame(rows, cols, rng);
      const GameMapping f = RandomRelabelling(rows, cols, rng);
      const BimatrixGame g2 = RelabelGame(g, f);
      const StateVector psi = RandomState({rows, cols}, rng);
      const BimatrixGame q1 = GeneralizedMwGame(g, psi);
      const BimatrixGame q2 = GeneralizedMwGame(g2, psi);
      ++total;
      auto lifted = StrongIsomorphism::Certify(q1, q2, InducedIsomorphism(f));
      const auto searched = FindIsomorphisms(q1, q2, {.limit = 1});
      if (lifted && !searched.empty()) {
        ++verified;
        Record(q1, q2, {*lifted});
        Record(q1, q2, searched);
      }
    }
  }
  return {verified == total,
          std::to_string(verified) + "/" + std::to_string(total) + " verified"};
}

Outcome RefinedLiftVerifies() {
  std::size_t verified = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    auto rng = TrialRng(8, t);
    const BimatrixGame g = RandomIntegerGame(2, 2, rng);
    const GameMapping f = RandomRelabelling(2, 2, rng);
    const StateVector psi = RandomState({2, 2}, rng);
    const BimatrixGame q1 = RefinedScheme(g, psi).PayoffMatrix();
    const BimatrixGame q2 = RefinedScheme(RelabelGame(g, f), psi).PayoffMatrix();
    auto lifted =
        StrongIsomorphism::Certify(q1, q2, RefinedInducedIsomorphism(f));
    if (lifted) {
      ++verified;
      Record(q1, q2, {*lifted});
    }
  }
  return {verified == 200, std::to_string(verified) + "/200 verified"};
}

Outcome PlayerSwapInvariance() {
  std::size_t verified = 0, total = 0;
  const std::pair<std::size_t, std::size_t> shapes[] = {
      {2, 2}, {2, 3}, {3, 2}, {3, 3}};
  const std::size_t factorial[] = {1, 1, 2, 6};
  for (std::size_t s = 0; s < 4; ++s) {
    const auto [rows, cols] = shapes[s];
    const GameMapping mapping =
        InducedIsomorphism(GameMapping::PlayerSwap(rows, cols));
    // The lift must be the bare player swap fixing every A_pi and B_sigma.
    const bool fixes_strategies =
        mapping == GameMapping::PlayerSwap(factorial[rows], factorial[cols]);
    for (std::uint64_t t = 0; t < 100; ++t) {
      auto rng = TrialRng(90 + s, t);
      const BimatrixGame g = RandomIntegerGame(rows, cols, rng);
      const StateVector psi = RandomState({rows, cols}, rng);
      ++total;
      if (fixes_strategies &&
          VerifyIsomorphism(GeneralizedMwGame(g, psi),
                            GeneralizedMwGame(SwapPlayers(g), SwapFactors(psi)),
                            mapping)) {
        ++verified;
      }
    }
  }
  return {verified == total,
          std::to_string(verified) + "/" + std::to_string(total) + " verified"};
}

Outcome ConverseCounterexample() {
  const BimatrixGame g = testing::ConverseGame1();
  const BimatrixGame g2 = testing::ConverseGame2();
  const OperatorSet pauli = IdentitySigmaOperators();
  const BimatrixGame q1 = MwPayoffMatrix(g, testing::BellState(), pauli, pauli);
  const BimatrixGame q2 = MwPayoffMatrix(g2, testing::BellState(), pauli, pauli);
  const bool inputs_iso = AreIsomorphic(g, g2);
  const double d = MaxPayoffDiff(q1, q2);
  const bool via_identity =
      VerifyIsomorphism(q1, q2, GameMapping::Identity(2, 2));
  return {!inputs_iso && d < kTol && via_identity,
          std::string("inputs ") + (inputs_iso ? "isomorphic" : "not isomorphic") +
              ", max |output1 - output2| = " + Sci(d)};
}

// Test-side equilibrium check: the image of the equilibrium set is exactly the
// equilibrium set of the target.
bool ImageMatches(const FoundIsomorphism& x) {
  std::set<PureProfile> image;
  for (const PureProfile& p : FindPureNash(x.g)) image.insert(x.f.mapping().Apply(p));
  const auto target = FindPureNash(x.g2);
  return image == std::set<PureProfile>(target.begin(), target.end());
}

Outcome EquilibriaCorrespond() {
  std::size_t holds = 0;
  for (const auto& x : g_found) holds += ImageMatches(x) ? 1 : 0;
  return {!g_found.empty() && holds == g_found.size(),
          std::to_string(holds) + "/" + std::to_string(g_found.size()) +
              " isomorphisms"};
}

Outcome DimensionLaw() {
  const std::size_t factorial[] = {1, 1, 2, 6};
  std::string detail;
  bool ok = true;
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t m = 2; m <= 3; ++m) {
      auto rng = TrialRng(12, n * 4 + m);
      const BimatrixGame q = GeneralizedMwGame(RandomIntegerGame(n, m, rng),
                                               RandomState({n, m}, rng));
      ok = ok && q.num_rows() == factorial[n] && q.num_cols() == factorial[m];
      detail += (detail.empty() ? "" : ", ") + std::to_string(n) + "x" +
                std::to_string(m) + "->" + std::to_string(q.num_rows()) + "x" +
                std::to_string(q.num_cols());
    }
  }
  return {ok, detail};
}

}  // namespace
}  // namespace qgi

int main() {
  using qgi::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {
          {"refined scheme reproduces both 4x4 outputs",
           qgi::RefinedReproduction},
          {"refined oracle equals trace path", qgi::RefinedOracleMatchesTrace},
          {"correlated scheme reproduces 3x3 outputs and equilibria",
           qgi::CorrelatedReproduction},
          {"correlated scheme violates invariance", qgi::CorrelatedViolates},
          {"three-element operator sets reproduce 2x3 outputs",
           qgi::ThreeColumnReproduction},
          {"permutation scheme reproduces 2x6 outputs and pairing",
           qgi::PermutationReproduction},
          {"induced isomorphism verifies on generalized outputs",
           qgi::InducedLiftVerifies},
          {"refined induced isomorphism verifies", qgi::RefinedLiftVerifies},
          {"player swap lifts to generalized outputs",
           qgi::PlayerSwapInvariance},
          {"non-isomorphic inputs with identical MW outputs",
           qgi::ConverseCounterexample},
          {"equilibria map onto equilibria for every found isomorphism",
           qgi::EquilibriaCorrespond},
          {"generalized output dimensions are factorials", qgi::DimensionLaw},
      };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1,
                criteria[k].first, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
