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

#include "demo.h"

#include <cmath>
#include <filesystem>
#include <sstream>

#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/isomorphism.h"
#include "qgi/linalg.h"
#include "render.h"

namespace qgi::cli {
namespace {

namespace fs = std::filesystem;

class ExampleWriter {
 public:
  ExampleWriter(const fs::path& root, std::string name)
      : dir_(root / name), name_(std::move(name)) {
    fs::create_directories(dir_);
  }

  void Game(const std::string& stem, const BimatrixGame& g) {
    Write(stem + ".json", JsonText(GameToJson(g)));
    Write(stem + ".txt", FormatGameTable(g) + NashLine(g) + "\n");
  }

  void State(const std::string& stem, const StateVector& psi) {
    Write(stem + ".json", JsonText(StateToJson(psi)));
  }

  void Report(const std::string& stem, const InvarianceReport& report,
              const BimatrixGame& g, const BimatrixGame& g2) {
    Write(stem + ".json", JsonText(ReportToJson(report)));
    Write(stem + ".txt", ReportText(report, g, g2));
    verdicts_[stem] = VerdictName(report.verdict);
  }

  void Write(const std::string& file, const std::string& contents) {
    WriteTextFile((dir_ / file).string(), contents);
    files_.push_back(name_ + "/" + file);
  }

  Json Index() const { return Json{{"files", files_}, {"verdicts", verdicts_}}; }

 private:
  fs::path dir_;
  std::string name_;
  std::vector<std::string> files_;
  Json verdicts_ = Json::object();
};

BimatrixGame Chicken() {
  return BimatrixGame({"t", "b"}, {"l", "r"}, {{6, 6}, {2, 7}, {7, 2}, {0, 0}});
}

BimatrixGame ChickenPrime() {
  return BimatrixGame({"t'", "b'"}, {"l'", "r'"},
                      {{2, 7}, {6, 6}, {0, 0}, {7, 2}});
}

BimatrixGame ThreeColumn() {
  return BimatrixGame({"t", "b"}, {"l", "m", "r"},
                      {{4, 8}, {0, 0}, {8, 8}, {0, 4}, {4, 0}, {8, 0}});
}

BimatrixGame ThreeColumnPrime() {
  return BimatrixGame({"t'", "b'"}, {"l'", "m'", "r'"},
                      {{0, 0}, {4, 8}, {8, 8}, {4, 0}, {0, 4}, {8, 0}});
}

SchemeConfig Scheme(SchemeKind kind, const StateVector& psi,
                    std::string ops1 = "", std::string ops2 = "") {
  return {.kind = kind,
          .ops1 = std::move(ops1),
          .ops2 = std::move(ops2),
          .state = psi};
}

Json ExampleOne(const fs::path& root) {
  ExampleWriter w(root, "example1");
  const BimatrixGame g = Chicken();
  const BimatrixGame g2 = ChickenPrime();
  const double a = 1.0 / std::sqrt(3.0);
  const StateVector psi({2, 2}, {a, a, a, 0.0});
  w.Game("gamma1", g);
  w.Game("gamma2", g2);
  w.State("state", psi);
  for (SchemeKind kind : {SchemeKind::kRefined, SchemeKind::kCorrelated}) {
    const std::string name(SchemeKindName(kind));
    const InvarianceReport report =
        CheckSchemeInvariance(Scheme(kind, psi), g, g2);
    w.Game(name + "_output1", report.output1);
    w.Game(name + "_output2", report.output2);
    w.Report(name + "_invariance", report, g, g2);
  }
  return w.Index();
}

Json ExampleTwo(const fs::path& root) {
  ExampleWriter w(root, "example2");
  const BimatrixGame g = ThreeColumn();
  const BimatrixGame g2 = ThreeColumnPrime();
  std::vector<Complex> amps(6);
  amps[0] = 0.5;
  amps[5] = std::sqrt(3.0) / 2.0;
  const StateVector psi({2, 3}, amps);
  w.Game("gamma", g);
  w.Game("gamma_prime", g2);
  w.State("state", psi);
  for (const char* ops2 : {"iqbal3", "cyclic:3"}) {
    const std::string stem = std::string(ops2) == "iqbal3" ? "iqbal3" : "cyclic";
    const InvarianceReport report = CheckSchemeInvariance(
        Scheme(SchemeKind::kMw, psi, "identity-sigma", ops2), g, g2);
    w.Game(stem + "_output1", report.output1);
    w.Game(stem + "_output2", report.output2);
    w.Report(stem + "_invariance", report, g, g2);
  }
  // Columns in the displayed order: A_012, A_102, A_021, A_120, A_201, A_210.
  const InvarianceReport report =
      CheckSchemeInvariance(Scheme(SchemeKind::kPermutation, psi), g, g2,
                            {.permutation_order = PermutationOrder::kPaired});
  w.Game("perm_output1", report.output1);
  w.Game("perm_output2", report.output2);
  w.Report("perm_invariance", report, g, g2);
  return w.Index();
}

Json Counterexample(const fs::path& root) {
  ExampleWriter w(root, "counterexample");
  const BimatrixGame g({"t", "b"}, {"l", "r"}, {{3, 1}, {0, 0}, {0, 0}, {1, 3}});
  const BimatrixGame g2({"t'", "b'"}, {"l'", "r"},
                        {{4, 0}, {0, 0}, {0, 0}, {0, 4}});
  const double a = 1.0 / std::sqrt(2.0);
  const StateVector psi({2, 2}, {a, 0.0, 0.0, a});
  w.Game("game1", g);
  w.Game("game2", g2);
  w.State("state", psi);
  const InvarianceReport report = CheckSchemeInvariance(
      Scheme(SchemeKind::kMw, psi, "identity-sigma", "identity-sigma"), g, g2);
  w.Game("mw_output1", report.output1);
  w.Game("mw_output2", report.output2);
  w.Report("mw_invariance", report, g, g2);
  std::ostringstream note;
  note << "max |output1 - output2| = "
       << FormatPayoff(MaxPayoffDiff(report.output1, report.output2)) << '\n'
       << "inputs isomorphic: " << (report.inputs_isomorphic ? "yes" : "no")
       << "\noutputs isomorphic: "
       << (report.outputs_isomorphic ? "yes" : "no") << '\n';
  w.Write("identical_outputs.txt", note.str());
  return w.Index();
}

}  // namespace

Json WriteDemo(const std::string& dir) {
  const fs::path root(dir);
  fs::create_directories(root);
  return Json{{"example1", ExampleOne(root)},
              {"example2", ExampleTwo(root)},
              {"counterexample", Counterexample(root)}};
}

}  // namespace qgi::cli
