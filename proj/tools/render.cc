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

#include "render.h"

#include <sstream>

namespace qgi::cli {

std::string ProfileText(const BimatrixGame& g, const PureProfile& p) {
  return "(" + g.row_labels()[p.row] + ", " + g.col_labels()[p.col] + ")";
}

std::string NashLine(const BimatrixGame& g) {
  const auto equilibria = FindPureNash(g);
  std::string line =
      "pure Nash equilibria (" + std::to_string(equilibria.size()) + "):";
  if (equilibria.empty()) return line + " none";
  for (std::size_t k = 0; k < equilibria.size(); ++k) {
    line += (k == 0 ? " " : ", ") + ProfileText(g, equilibria[k]);
  }
  return line;
}

Json NashJson(const BimatrixGame& g) {
  Json out = Json::array();
  for (const PureProfile& p : FindPureNash(g)) {
    out.push_back(Json{{"row", p.row},
                       {"col", p.col},
                       {"labels", Json::array({g.row_labels()[p.row],
                                               g.col_labels()[p.col]})}});
  }
  return out;
}

std::string ReportText(const InvarianceReport& report, const BimatrixGame& g,
                       const BimatrixGame& g2) {
  std::ostringstream out;
  out << "scheme: " << SchemeKindName(report.scheme.kind);
  if (report.scheme.kind == SchemeKind::kMw) {
    out << " (" << report.scheme.ops1 << " x " << report.scheme.ops2 << ")";
  }
  out << '\n';
  if (report.inputs_isomorphic) {
    out << "inputs: ISOMORPHIC\n"
        << Describe(report.input_isomorphisms.front().mapping(), g, g2);
  } else {
    out << "inputs: NOT ISOMORPHIC\n";
  }
  out << "\noutput 1:\n"
      << FormatGameTable(report.output1) << NashLine(report.output1) << '\n'
      << "\noutput 2:\n"
      << FormatGameTable(report.output2) << NashLine(report.output2) << "\n\n";
  if (report.refuted_by_equilibria) {
    out << "outputs: NOT ISOMORPHIC (pure equilibrium counts differ: "
        << report.output1_equilibria << " vs " << report.output2_equilibria
        << ")\n";
  } else if (!report.outputs_decided) {
    out << "outputs: NOT SEARCHED (larger than the search cap)\n";
  } else if (report.outputs_isomorphic) {
    out << "outputs: ISOMORPHIC\n"
        << Describe(report.output_isomorphisms.front().mapping(),
                    report.output1, report.output2);
  } else {
    out << "outputs: NOT ISOMORPHIC (exhaustive search)\n";
  }
  if (report.constructive_checked) {
    out << "constructive lift: "
        << (report.constructive_verified ? "verified" : "FAILED") << '\n';
    if (report.constructive_verified && !report.outputs_decided) {
      out << Describe(*report.constructive_mapping, report.output1,
                      report.output2);
    }
  }
  out << "verdict: " << VerdictName(report.verdict) << '\n';
  return out.str();
}

Verdict SummaryVerdict(const TrialSummary& summary) {
  if (summary.violations > 0) return Verdict::kViolates;
  if (summary.undecided > 0) return Verdict::kUndecidedBySearch;
  return Verdict::kPreserves;
}

std::string SummaryText(const TrialSummary& summary) {
  std::ostringstream out;
  out << "trials: " << summary.trials << "  preserves: " << summary.preserves
      << "  violations: " << summary.violations
      << "  undecided: " << summary.undecided << '\n';
  if (summary.constructive_checked > 0) {
    out << "constructive lift: "
        << summary.constructive_checked - summary.constructive_failures << "/"
        << summary.constructive_checked << " verified\n";
  }
  if (!summary.certificates.empty()) {
    out << "certificates: " << summary.certificates.size() << '\n';
  }
  out << "verdict: " << VerdictName(SummaryVerdict(summary)) << '\n';
  return out.str();
}

std::string JsonText(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qgi::cli
