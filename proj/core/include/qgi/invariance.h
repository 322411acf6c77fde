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

#ifndef QGI_INVARIANCE_H_
#define QGI_INVARIANCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgi/games.h"
#include "qgi/isomorphism.h"
#include "qgi/linalg.h"
#include "qgi/operators.h"

namespace qgi {

enum class SchemeKind { kRefined, kCorrelated, kMw, kPermutation };

std::string_view SchemeKindName(SchemeKind kind);
// Accepts "refined", "correlated", "mw" and "perm".
std::optional<SchemeKind> ParseSchemeKind(std::string_view name);

// Which construction to apply. ops1/ops2 name operator sets (see
// ResolveOperatorSet) and are used only, and required, for kMw.
struct SchemeConfig {
  SchemeKind kind = SchemeKind::kRefined;
  std::string ops1{};
  std::string ops2{};
  std::optional<StateVector> state{};
};

enum class EvaluationPath { kTrace, kOracle };

// Output game of `g` under the scheme. Throws kInvalidArgument for an
// inconsistent config and propagates scheme errors.
BimatrixGame Quantize(const SchemeConfig& scheme, const BimatrixGame& g,
                      EvaluationPath path = EvaluationPath::kTrace,
                      PermutationOrder order = PermutationOrder::kLexicographic);

enum class Verdict {
  kPreserves,          // inputs and outputs both isomorphic
  kViolates,           // inputs isomorphic, outputs not
  kVacuous,            // inputs not isomorphic
  kUndecidedBySearch,  // inputs isomorphic, outputs too large to search
};

std::string_view VerdictName(Verdict verdict);

struct InvarianceOptions {
  // Cap on the isomorphisms kept in the report for each side.
  std::size_t max_reported = 16;
  // Output games with more strategies per player are not searched.
  std::size_t max_search_strategies = 6;
  // Strategy order for the permutation scheme's outputs.
  PermutationOrder permutation_order = PermutationOrder::kLexicographic;
};

struct InvarianceReport {
  SchemeConfig scheme;
  BimatrixGame output1;
  BimatrixGame output2;
  bool inputs_isomorphic = false;
  std::vector<StrongIsomorphism> input_isomorphisms{};
  bool outputs_isomorphic = false;
  // False when the outputs were neither searched nor settled constructively.
  bool outputs_decided = true;
  std::vector<StrongIsomorphism> output_isomorphisms{};
  // Pure equilibrium counts of the outputs; unequal counts rule out an
  // isomorphism without searching.
  std::size_t output1_equilibria = 0;
  std::size_t output2_equilibria = 0;
  bool refuted_by_equilibria = false;
  // Refined and permutation schemes: the lift of the first input isomorphism
  // with identity eta, checked directly on the outputs. Runs regardless of
  // output size; it never changes the verdict.
  bool constructive_checked = false;
  bool constructive_verified = false;
  std::optional<GameMapping> constructive_mapping{};
  Verdict verdict = Verdict::kVacuous;
};

// Quantizes both games with the same scheme (and the same initial state),
// then searches for strong isomorphisms between the inputs and the outputs.
InvarianceReport CheckSchemeInvariance(const SchemeConfig& scheme,
                                       const BimatrixGame& g,
                                       const BimatrixGame& g2,
                                       const InvarianceOptions& options = {});

// Mapping between permutation-scheme outputs induced by an input isomorphism
// f: each A_pi goes to A_{pi* o pi} where pi* is f's strategy permutation.
// With eta = swap the players are first renumbered, so the second output must
// be built from SwapFactors(psi). Strategy indices follow `order`.
// Throws kSizeLimit above kMaxPermutationDegree.
GameMapping InducedIsomorphism(
    const GameMapping& f,
    PermutationOrder order = PermutationOrder::kLexicographic);

// Lift of the induced mapping to the refined scheme's P_i (x) U_j strategies:
// the projector is kept and U_j is mapped as in InducedIsomorphism. Throws
// kNonPermutationMapping unless f maps between 2x2 games.
GameMapping RefinedInducedIsomorphism(const GameMapping& f);

// A replayable trial in which the scheme broke invariance.
struct InvarianceCertificate {
  BimatrixGame game1;
  BimatrixGame game2;
  GameMapping input_isomorphism;
  StateVector state;
  SchemeConfig scheme;
};

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t preserves = 0;
  std::size_t violations = 0;
  std::size_t undecided = 0;
  // Trials where the induced mapping could be checked (refined and
  // permutation schemes), and how many of those failed to verify.
  std::size_t constructive_checked = 0;
  std::size_t constructive_failures = 0;
  std::vector<InvarianceCertificate> certificates;
};

struct TrialOptions {
  std::size_t threads = 1;
  std::size_t max_certificates = 8;
};

// Random games with integer payoffs in [0, 9], random strategy relabellings
// and random complex states. The summary depends only on the seed.
TrialSummary RandomizedInvarianceTrial(const SchemeConfig& scheme,
                                       std::size_t rows, std::size_t cols,
                                       std::size_t trials, std::uint64_t seed,
                                       const TrialOptions& options = {});

// Helpers shared with tests and the CLI.
BimatrixGame RandomIntegerGame(std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng, int max_payoff = 9);
StateVector RandomState(std::vector<std::size_t> dims, std::mt19937_64& rng);

}  // namespace qgi

#endif  // QGI_INVARIANCE_H_
