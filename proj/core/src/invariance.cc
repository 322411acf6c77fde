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

#include "qgi/invariance.h"

#include <exception>
#include <map>
#include <random>
#include <thread>
#include <utility>

#include "qgi/errors.h"
#include "qgi/schemes.h"

namespace qgi {
namespace {

std::size_t Factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

const StateVector& RequireState(const SchemeConfig& scheme) {
  if (!scheme.state) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(SchemeKindName(scheme.kind)) +
                    " scheme needs an initial state");
  }
  return *scheme.state;
}

void ValidateConfig(const SchemeConfig& scheme) {
  const bool has_ops = !scheme.ops1.empty() || !scheme.ops2.empty();
  if (scheme.kind == SchemeKind::kMw) {
    if (scheme.ops1.empty() || scheme.ops2.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "mw scheme needs operator sets for both players");
    }
  } else if (has_ops) {
    throw Error(ErrorCode::kInvalidArgument,
                "operator sets apply only to the mw scheme");
  }
}

// Maps each strategy index a (naming A_{perms[a]}) to the index of
// A_{star o perms[a]}.
Permutation LiftToPermutationStrategies(const Permutation& star,
                                        PermutationOrder order) {
  if (star.size() > kMaxPermutationDegree) {
    throw Error(ErrorCode::kSizeLimit,
                "induced mapping is limited to " +
                    std::to_string(kMaxPermutationDegree) +
                    " strategies per player");
  }
  const std::vector<Permutation> perms = OrderedPermutations(star.size(), order);
  std::map<Permutation, std::size_t> index;
  for (std::size_t a = 0; a < perms.size(); ++a) index.emplace(perms[a], a);
  Permutation lifted(perms.size());
  for (std::size_t a = 0; a < perms.size(); ++a) {
    lifted[a] = index.at(Compose(star, perms[a]));
  }
  return lifted;
}

// An isomorphism f with eta = swap factors as (player swap g -> swap(g))
// followed by this identity-eta mapping swap(g) -> g2.
GameMapping AfterPlayerSwap(const GameMapping& f) {
  return GameMapping(PlayerBijection::kIdentity, f.phi2(), f.phi1());
}

struct TrialOutcome {
  Verdict verdict = Verdict::kVacuous;
  bool constructive_checked = false;
  bool constructive_ok = true;
  std::optional<InvarianceCertificate> certificate;
};

}  // namespace

std::string_view SchemeKindName(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::kRefined: return "refined";
    case SchemeKind::kCorrelated: return "correlated";
    case SchemeKind::kMw: return "mw";
    case SchemeKind::kPermutation: return "perm";
  }
  return "unknown";
}

std::optional<SchemeKind> ParseSchemeKind(std::string_view name) {
  if (name == "refined") return SchemeKind::kRefined;
  if (name == "correlated") return SchemeKind::kCorrelated;
  if (name == "mw") return SchemeKind::kMw;
  if (name == "perm") return SchemeKind::kPermutation;
  return std::nullopt;
}

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPreserves: return "PRESERVES";
    case Verdict::kViolates: return "VIOLATES";
    case Verdict::kVacuous: return "VACUOUS";
    case Verdict::kUndecidedBySearch: return "UNDECIDED-BY-SEARCH";
  }
  return "UNKNOWN";
}

BimatrixGame Quantize(const SchemeConfig& scheme, const BimatrixGame& g,
                      EvaluationPath path, PermutationOrder order) {
  ValidateConfig(scheme);
  const StateVector& psi = RequireState(scheme);
  const bool oracle = path == EvaluationPath::kOracle;
  switch (scheme.kind) {
    case SchemeKind::kRefined:
      return oracle ? RefinedMatrixOracle(g, psi)
                    : RefinedScheme(g, psi).PayoffMatrix();
    case SchemeKind::kCorrelated:
      return oracle ? CorrelatedMatrixOracle(g, psi)
                    : CorrelatedMatrixByTrace(g, psi);
    case SchemeKind::kMw: {
      const OperatorSet ops1 = ResolveOperatorSet(scheme.ops1, g.num_rows());
      const OperatorSet ops2 = ResolveOperatorSet(scheme.ops2, g.num_cols());
      return oracle ? MwPermutationOracle(g, psi, ops1, ops2)
                    : MwPayoffMatrix(g, psi, ops1, ops2);
    }
    case SchemeKind::kPermutation:
      return oracle ? GeneralizedMwOracle(g, psi, order)
                    : GeneralizedMwGame(g, psi, order);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme");
}

InvarianceReport CheckSchemeInvariance(const SchemeConfig& scheme,
                                       const BimatrixGame& g,
                                       const BimatrixGame& g2,
                                       const InvarianceOptions& options) {
  InvarianceReport report{.scheme = scheme,
                          .output1 = Quantize(scheme, g, EvaluationPath::kTrace,
                                              options.permutation_order),
                          .output2 = Quantize(scheme, g2, EvaluationPath::kTrace,
                                              options.permutation_order)};
  report.input_isomorphisms =
      FindIsomorphisms(g, g2, {.limit = options.max_reported});
  report.inputs_isomorphic = !report.input_isomorphisms.empty();

  report.output1_equilibria = FindPureNash(report.output1).size();
  report.output2_equilibria = FindPureNash(report.output2).size();
  const auto& out1 = report.output1;
  const auto& out2 = report.output2;
  const bool searchable = out1.num_rows() <= options.max_search_strategies &&
                          out1.num_cols() <= options.max_search_strategies &&
                          out2.num_rows() <= options.max_search_strategies &&
                          out2.num_cols() <= options.max_search_strategies;

  if (report.output1_equilibria != report.output2_equilibria) {
    report.refuted_by_equilibria = true;
    report.outputs_isomorphic = false;
  } else if (searchable) {
    report.output_isomorphisms =
        FindIsomorphisms(out1, out2, {.limit = options.max_reported});
    report.outputs_isomorphic = !report.output_isomorphisms.empty();
  } else {
    report.outputs_decided = false;
  }

  const bool liftable = scheme.kind == SchemeKind::kPermutation ||
                        scheme.kind == SchemeKind::kRefined;
  if (liftable) {
    // The same state quantizes both games, so only eta = id lifts apply.
    for (const StrongIsomorphism& f : report.input_isomorphisms) {
      if (f.mapping().swaps_players()) continue;
      GameMapping lifted = scheme.kind == SchemeKind::kPermutation
                               ? InducedIsomorphism(f.mapping(),
                                                    options.permutation_order)
                               : RefinedInducedIsomorphism(f.mapping());
      report.constructive_checked = true;
      report.constructive_verified = VerifyIsomorphism(out1, out2, lifted);
      report.constructive_mapping = std::move(lifted);
      break;
    }
  }

  if (!report.inputs_isomorphic) {
    report.verdict = Verdict::kVacuous;
  } else if (!report.outputs_decided) {
    report.verdict = Verdict::kUndecidedBySearch;
  } else {
    report.verdict = report.outputs_isomorphic ? Verdict::kPreserves
                                               : Verdict::kViolates;
  }
  return report;
}

GameMapping InducedIsomorphism(const GameMapping& f, PermutationOrder order) {
  if (f.swaps_players()) {
    const GameMapping renumber = GameMapping::PlayerSwap(
        Factorial(f.source_rows()), Factorial(f.source_cols()));
    return renumber.Then(InducedIsomorphism(AfterPlayerSwap(f), order));
  }
  return GameMapping(PlayerBijection::kIdentity,
                     LiftToPermutationStrategies(f.phi1(), order),
                     LiftToPermutationStrategies(f.phi2(), order));
}

GameMapping RefinedInducedIsomorphism(const GameMapping& f) {
  if (f.source_rows() != 2 || f.source_cols() != 2) {
    throw Error(ErrorCode::kNonPermutationMapping,
                "refined lift needs an isomorphism between 2x2 games");
  }
  if (f.swaps_players()) {
    return GameMapping::PlayerSwap(4, 4).Then(
        RefinedInducedIsomorphism(AfterPlayerSwap(f)));
  }
  // Lexicographic order on two symbols is (A_01, A_10) = (1, sigma_x), the
  // same order as U_0, U_1.
  const GameMapping on_unitaries =
      InducedIsomorphism(f, PermutationOrder::kLexicographic);
  auto lift = [](const Permutation& phi) {
    Permutation xi(4);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) xi[2 * i + j] = 2 * i + phi[j];
    }
    return xi;
  };
  return GameMapping(PlayerBijection::kIdentity, lift(on_unitaries.phi1()),
                     lift(on_unitaries.phi2()));
}

BimatrixGame RandomIntegerGame(std::size_t rows, std::size_t cols,
                               std::mt19937_64& rng, int max_payoff) {
  std::uniform_int_distribution<int> payoff(0, max_payoff);
  std::vector<std::vector<PayoffPair>> table(rows,
                                             std::vector<PayoffPair>(cols));
  for (auto& row : table) {
    for (PayoffPair& p : row) {
      p.row = payoff(rng);
      p.col = payoff(rng);
    }
  }
  return BimatrixGame::FromMatrix(table);
}

StateVector RandomState(std::vector<std::size_t> dims, std::mt19937_64& rng) {
  std::size_t n = 1;
  for (std::size_t d : dims) n *= d;
  std::normal_distribution<double> normal;
  std::vector<Complex> amplitudes(n);
  for (Complex& z : amplitudes) z = Complex(normal(rng), normal(rng));
  return StateVector::Normalized(std::move(dims), std::move(amplitudes));
}

TrialSummary RandomizedInvarianceTrial(const SchemeConfig& scheme,
                                       std::size_t rows, std::size_t cols,
                                       std::size_t trials, std::uint64_t seed,
                                       const TrialOptions& options) {
  if (trials == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  ValidateConfig(scheme);
  const bool two_qubit = scheme.kind == SchemeKind::kRefined ||
                         scheme.kind == SchemeKind::kCorrelated;
  if (two_qubit && (rows != 2 || cols != 2)) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(SchemeKindName(scheme.kind)) +
                    " scheme takes 2x2 games");
  }
  const std::vector<std::size_t> dims =
      two_qubit ? std::vector<std::size_t>{2, 2}
                : std::vector<std::size_t>{rows, cols};

  auto run_trial = [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t),
                      static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    const BimatrixGame g = RandomIntegerGame(rows, cols, rng);
    const GameMapping f = RandomRelabelling(rows, cols, rng);
    const BimatrixGame g2 = RelabelGame(g, f);
    SchemeConfig config = scheme;
    config.state = RandomState(dims, rng);
    const InvarianceReport report =
        CheckSchemeInvariance(config, g, g2, {.max_reported = 1});
    TrialOutcome outcome;
    outcome.verdict = report.verdict;
    if (scheme.kind == SchemeKind::kPermutation ||
        scheme.kind == SchemeKind::kRefined) {
      const GameMapping lifted = scheme.kind == SchemeKind::kPermutation
                                     ? InducedIsomorphism(f)
                                     : RefinedInducedIsomorphism(f);
      outcome.constructive_checked = true;
      outcome.constructive_ok =
          VerifyIsomorphism(report.output1, report.output2, lifted);
    }
    if (report.verdict == Verdict::kViolates) {
      outcome.certificate = InvarianceCertificate{
          .game1 = g,
          .game2 = g2,
          .input_isomorphism = f,
          .state = *config.state,
          .scheme = config,
      };
    }
    return outcome;
  };

  std::vector<std::optional<TrialOutcome>> outcomes(trials);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(options.threads, trials));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) outcomes[t] = run_trial(t);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < trials; t += workers) {
            outcomes[t] = run_trial(t);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  TrialSummary summary;
  summary.trials = trials;
  for (auto& outcome : outcomes) {
    switch (outcome->verdict) {
      case Verdict::kPreserves: ++summary.preserves; break;
      case Verdict::kViolates: ++summary.violations; break;
      case Verdict::kUndecidedBySearch: ++summary.undecided; break;
      case Verdict::kVacuous:
        throw Error(ErrorCode::kInternalState,
                    "relabelled input was not recognized as isomorphic");
    }
    if (outcome->constructive_checked) {
      ++summary.constructive_checked;
      if (!outcome->constructive_ok) ++summary.constructive_failures;
    }
    if (outcome->certificate &&
        summary.certificates.size() < options.max_certificates) {
      summary.certificates.push_back(std::move(*outcome->certificate));
    }
  }
  return summary;
}

}  // namespace qgi
