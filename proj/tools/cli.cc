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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "demo.h"
#include "qgi/errors.h"
#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/io.h"
#include "qgi/isomorphism.h"
#include "qgi/schemes.h"
#include "render.h"

namespace qgi::cli {
namespace {

constexpr double kPathAgreement = 1e-9;

// Message without the leading "<ErrorCode>: ".
std::string Detail(const Error& e) {
  const std::string what = e.what();
  const std::string prefix = std::string(ErrorCodeName(e.code())) + ": ";
  return what.starts_with(prefix) ? what.substr(prefix.size()) : what;
}

// Runs `fn`, prefixing shape and dimension errors with the inputs involved.
template <typename Fn>
auto Naming(const std::string& inputs, Fn fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDimensionMismatch &&
        e.code() != ErrorCode::kShapeMismatch) {
      throw;
    }
    throw Error(e.code(), inputs + ": " + Detail(e));
  }
}

// Loads a JSON file through `convert`, naming the file in any error.
template <typename Convert>
auto Load(const std::string& what, const std::string& path, Convert convert) {
  try {
    return convert(ReadJsonFile(path));
  } catch (const Error& e) {
    const std::string detail = Detail(e);
    if (detail.starts_with(path)) throw;
    throw Error(e.code(), what + " " + path + ": " + detail);
  }
}

BimatrixGame LoadGame(const std::string& path) {
  return Load("game", path, [](const Json& j) { return GameFromJson(j); });
}

StateVector LoadState(const std::string& path) {
  return Load("state", path, [](const Json& j) { return StateFromJson(j); });
}

struct Options {
  std::string format = "table";

  // nash / iso
  std::string game_path;
  std::string game2_path;
  bool all = false;
  bool no_swap = false;
  bool strict = false;

  // quantize / invariance
  std::string scheme;
  std::string ops1;
  std::string ops2;
  std::string state_path;
  bool use_oracle = false;
  bool use_trace = false;
  bool use_both = false;
  std::string column_order = "lex";
  bool random = false;
  std::string shape;
  std::size_t trials = 200;
  std::uint64_t seed = 7;
  std::size_t threads = 1;
  std::string certificate_path;
  std::string certificates_out;

  // demo
  std::string out_dir = "qgi-demo";
};

bool WantsJson(const Options& o) { return o.format == "json"; }

PermutationOrder ColumnOrder(const Options& o) {
  return o.column_order == "paper" ? PermutationOrder::kPaired
                                   : PermutationOrder::kLexicographic;
}

SchemeConfig SchemeFromOptions(const Options& o) {
  if (o.scheme.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "--scheme is required");
  }
  const auto kind = ParseSchemeKind(o.scheme);
  if (!kind) {
    throw Error(ErrorCode::kInvalidArgument, "unknown scheme '" + o.scheme +
                                                 "' (refined, correlated, mw, perm)");
  }
  if (o.column_order == "paper" && *kind != SchemeKind::kPermutation) {
    throw Error(ErrorCode::kInvalidArgument,
                "--column-order applies only to --scheme perm");
  }
  return {.kind = *kind, .ops1 = o.ops1, .ops2 = o.ops2};
}

int Nash(const Options& o, std::ostream& out) {
  const BimatrixGame g = LoadGame(o.game_path);
  if (WantsJson(o)) {
    out << JsonText(Json{{"game", GameToJson(g)}, {"pure_nash", NashJson(g)}});
  } else {
    out << FormatGameTable(g) << NashLine(g) << '\n';
  }
  return kExitOk;
}

int Iso(const Options& o, std::ostream& out) {
  const BimatrixGame g = LoadGame(o.game_path);
  const BimatrixGame g2 = LoadGame(o.game2_path);
  const auto found = FindIsomorphisms(
      g, g2, {.limit = o.all ? 0u : 1u, .allow_player_swap = !o.no_swap});
  const std::size_t ne1 = FindPureNash(g).size();
  const std::size_t ne2 = FindPureNash(g2).size();
  if (WantsJson(o)) {
    Json mappings = Json::array();
    for (const auto& f : found) mappings.push_back(MappingToJson(f.mapping()));
    out << JsonText(Json{{"isomorphic", !found.empty()},
                              {"isomorphisms", std::move(mappings)},
                              {"pure_nash_counts", {ne1, ne2}}});
  } else if (found.empty()) {
    out << "NOT ISOMORPHIC\n";
    if (ne1 != ne2) {
      out << "pure equilibrium counts differ: " << ne1 << " vs " << ne2 << '\n';
    }
  } else {
    out << "ISOMORPHIC\n";
    for (std::size_t k = 0; k < found.size(); ++k) {
      if (o.all) out << "\nmapping " << k + 1 << " of " << found.size() << ":\n";
      out << Describe(found[k].mapping(), g, g2);
      out << "equilibria map onto equilibria: "
          << (CheckLemma1(g, g2, found[k]) ? "yes" : "NO") << '\n';
    }
  }
  return found.empty() && o.strict ? kExitVerdict : kExitOk;
}

int Quantize(const Options& o, std::ostream& out, std::ostream& err) {
  SchemeConfig scheme = SchemeFromOptions(o);
  scheme.state = LoadState(o.state_path);
  const BimatrixGame g = LoadGame(o.game_path);
  const PermutationOrder order = ColumnOrder(o);
  const bool oracle_only = o.use_oracle && !o.use_both;
  const std::string inputs =
      "game " + o.game_path + " with state " + o.state_path;
  const BimatrixGame primary = Naming(inputs, [&] {
    return qgi::Quantize(
        scheme, g,
        oracle_only ? EvaluationPath::kOracle : EvaluationPath::kTrace, order);
  });
  std::optional<double> difference;
  if (o.use_both) {
    difference = MaxPayoffDiff(primary, Naming(inputs, [&] {
                                 return qgi::Quantize(
                                     scheme, g, EvaluationPath::kOracle, order);
                               }));
  }
  const std::string path =
      o.use_both ? "both" : (oracle_only ? "oracle" : "trace");
  if (WantsJson(o)) {
    Json j{{"scheme", SchemeToJson(scheme)},
                {"path", path},
                {"output", GameToJson(primary)},
                {"pure_nash", NashJson(primary)}};
    if (difference) j["max_path_difference"] = *difference;
    out << JsonText(j);
  } else {
    out << FormatGameTable(primary) << NashLine(primary) << '\n';
    if (difference) {
      std::ostringstream d;
      d.precision(3);
      d << *difference;
      out << "trace vs oracle max |difference|: " << d.str() << '\n';
    }
  }
  if (difference && *difference > kPathAgreement) {
    err << "error: trace and oracle paths disagree\n";
    return kExitVerdict;
  }
  return kExitOk;
}

std::pair<std::size_t, std::size_t> ParseShape(const std::string& shape) {
  const auto x = shape.find('x');
  std::size_t rows = 0, cols = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(shape);
    std::size_t used = 0;
    rows = std::stoul(shape.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(shape);
    cols = std::stoul(shape.substr(x + 1), &used);
    if (used != shape.size() - x - 1) throw std::invalid_argument(shape);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument,
                "--shape must look like 2x3, got '" + shape + "'");
  }
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::kInvalidArgument, "--shape needs positive sizes");
  }
  return {rows, cols};
}

int InvarianceRandom(const Options& o, std::ostream& out) {
  const SchemeConfig scheme = SchemeFromOptions(o);
  const auto [rows, cols] = ParseShape(o.shape);
  const TrialSummary summary =
      RandomizedInvarianceTrial(scheme, rows, cols, o.trials, o.seed,
                                {.threads = o.threads});
  if (!o.certificates_out.empty()) {
    std::filesystem::create_directories(o.certificates_out);
    for (std::size_t k = 0; k < summary.certificates.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof(name), "certificate_%03zu.json", k);
      WriteTextFile(
          (std::filesystem::path(o.certificates_out) / name).string(),
          JsonText(CertificateToJson(summary.certificates[k])));
    }
  }
  const Verdict verdict = SummaryVerdict(summary);
  if (WantsJson(o)) {
    Json j = SummaryToJson(summary);
    j["scheme"] = SchemeToJson(scheme);
    j["shape"] = o.shape;
    j["seed"] = o.seed;
    j["verdict"] = VerdictName(verdict);
    out << JsonText(j);
  } else {
    out << SummaryText(summary);
  }
  const bool failed =
      verdict == Verdict::kViolates || summary.constructive_failures > 0;
  return failed && o.strict ? kExitVerdict : kExitOk;
}

int InvarianceReportFor(const Options& o, const SchemeConfig& scheme,
                        const BimatrixGame& g, const BimatrixGame& g2,
                        std::ostream& out) {
  const InvarianceReport report = CheckSchemeInvariance(
      scheme, g, g2, {.permutation_order = ColumnOrder(o)});
  if (WantsJson(o)) {
    out << JsonText(ReportToJson(report));
  } else {
    out << ReportText(report, g, g2);
  }
  const bool failed = report.verdict == Verdict::kViolates ||
                      (report.constructive_checked &&
                       !report.constructive_verified);
  return failed && o.strict ? kExitVerdict : kExitOk;
}

int Invariance(const Options& o, std::ostream& out) {
  if (!o.certificate_path.empty()) {
    const InvarianceCertificate c = Load(
        "certificate", o.certificate_path,
        [](const Json& j) { return CertificateFromJson(j); });
    return InvarianceReportFor(o, c.scheme, c.game1, c.game2, out);
  }
  if (o.random) return InvarianceRandom(o, out);
  if (o.game_path.empty() || o.game2_path.empty() || o.state_path.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "invariance needs --g1, --g2 and --state (or --random, or "
                "--certificate)");
  }
  SchemeConfig scheme = SchemeFromOptions(o);
  scheme.state = LoadState(o.state_path);
  const BimatrixGame g = LoadGame(o.game_path);
  const BimatrixGame g2 = LoadGame(o.game2_path);
  return Naming("games " + o.game_path + ", " + o.game2_path + " with state " +
                    o.state_path,
                [&] { return InvarianceReportFor(o, scheme, g, g2, out); });
}

int Demo(const Options& o, std::ostream& out) {
  const Json index = WriteDemo(o.out_dir);
  if (WantsJson(o)) {
    out << JsonText(Json{{"out", o.out_dir}, {"examples", index}});
    return kExitOk;
  }
  out << "wrote " << o.out_dir << '\n';
  for (const auto& [example, entry] : index.items()) {
    for (const auto& [stem, verdict] : entry.at("verdicts").items()) {
      out << "  " << example << "/" << stem << ": "
          << verdict.get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

void AddFormat(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
}

void AddSchemeOptions(CLI::App* cmd, Options& o, bool required) {
  cmd->add_option("--scheme", o.scheme, "refined | correlated | mw | perm")
      ->required(required);
  cmd->add_option("--ops1", o.ops1,
                  "Player 1 operators for mw: identity-sigma | iqbal3 | "
                  "cyclic:<n> | perm");
  cmd->add_option("--ops2", o.ops2, "Player 2 operators for mw");
  cmd->add_option("--column-order", o.column_order,
                  "Strategy order for the perm scheme")
      ->check(CLI::IsMember({"lex", "paper"}))
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Quantum game schemes and strong isomorphism checks", "qgi"};
  app.require_subcommand(1);

  auto* nash = app.add_subcommand("nash", "List pure Nash equilibria");
  nash->add_option("game", o.game_path, "Game JSON")->required();
  AddFormat(nash, o);

  auto* iso = app.add_subcommand("iso", "Search for strong isomorphisms");
  iso->add_option("game1", o.game_path, "Game JSON")->required();
  iso->add_option("game2", o.game2_path, "Game JSON")->required();
  iso->add_flag("--all", o.all, "List every isomorphism");
  iso->add_flag("--no-swap", o.no_swap, "Do not exchange the players");
  iso->add_flag("--strict", o.strict, "Exit 1 when not isomorphic");
  AddFormat(iso, o);

  auto* quantize = app.add_subcommand("quantize", "Quantize a game");
  AddSchemeOptions(quantize, o, true);
  quantize->add_option("--game", o.game_path, "Game JSON")->required();
  quantize->add_option("--state", o.state_path, "State JSON")->required();
  auto* trace = quantize->add_flag("--trace", o.use_trace,
                                   "Evaluate tr(rho M) (default)");
  auto* oracle = quantize->add_flag("--oracle", o.use_oracle,
                                    "Evaluate the closed-form payoffs");
  auto* both = quantize->add_flag("--both", o.use_both,
                                  "Evaluate both and compare");
  trace->excludes(oracle)->excludes(both);
  oracle->excludes(both);
  AddFormat(quantize, o);

  auto* invariance =
      app.add_subcommand("invariance", "Check isomorphism invariance");
  AddSchemeOptions(invariance, o, false);
  invariance->add_option("--g1", o.game_path, "First game JSON");
  invariance->add_option("--g2", o.game2_path, "Second game JSON");
  invariance->add_option("--state", o.state_path, "State JSON");
  auto* random = invariance->add_flag("--random", o.random,
                                      "Run seeded random trials");
  invariance->add_option("--shape", o.shape, "Game shape, e.g. 2x3")
      ->needs(random);
  invariance->add_option("--trials", o.trials)->capture_default_str();
  invariance->add_option("--seed", o.seed)->capture_default_str();
  invariance->add_option("--threads", o.threads)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  invariance->add_option("--certificates-out", o.certificates_out,
                         "Directory for violation certificates");
  invariance->add_option("--certificate", o.certificate_path,
                         "Replay a certificate JSON");
  invariance->add_flag("--strict", o.strict, "Exit 1 on VIOLATES");
  AddFormat(invariance, o);

  auto* demo = app.add_subcommand("demo", "Regenerate the worked examples");
  demo->add_option("--out", o.out_dir, "Report directory")
      ->capture_default_str();
  AddFormat(demo, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*nash) return Nash(o, out);
    if (*iso) return Iso(o, out);
    if (*quantize) return Quantize(o, out, err);
    if (*invariance) {
      if (o.random && o.shape.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "--random needs --shape");
      }
      return Invariance(o, out);
    }
    if (*demo) return Demo(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace qgi::cli
