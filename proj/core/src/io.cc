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

#include "qgi/io.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qgi/errors.h"

namespace qgi {
namespace {

constexpr double kFractionTolerance = 1e-9;
constexpr long kMaxDenominator = 64;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

const Json& Field(const Json& j, const char* key, const char* object) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string(object) + " is missing \"" + key + "\"");
  }
  return j.at(key);
}

std::vector<std::string> Labels(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<std::string> labels;
  for (const Json& label : j) {
    if (!label.is_string()) {
      Malformed(std::string(what) + " entries must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  return labels;
}

double Number(const Json& j, const std::string& where) {
  if (!j.is_number()) Malformed(where + " must be a number");
  return j.get<double>();
}

std::vector<std::size_t> IndexList(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  std::vector<std::size_t> p;
  for (const Json& v : j) {
    if (!v.is_number_unsigned()) {
      Malformed(std::string(what) + " entries must be non-negative integers");
    }
    p.push_back(v.get<std::size_t>());
  }
  return p;
}

std::string Trimmed(std::string s) {
  // "%.6g" never pads; nothing to trim beyond a negative zero.
  if (s == "-0") return "0";
  return s;
}

}  // namespace

Json ParseJson(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(
        e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse, std::string(source) + ":" +
                                       std::to_string(line) + ":" +
                                       std::to_string(column) + ": " +
                                       e.what());
  }
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream contents;
  contents << in.rdbuf();
  return ParseJson(contents.str(), path);
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
}

Json GameToJson(const BimatrixGame& g) {
  Json payoffs = Json::array();
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      row.push_back(Json::array({g.at(r, c).row, g.at(r, c).col}));
    }
    payoffs.push_back(std::move(row));
  }
  return Json{{"rows", g.row_labels()},
              {"cols", g.col_labels()},
              {"payoffs", std::move(payoffs)}};
}

BimatrixGame GameFromJson(const Json& j) {
  const Json& table = Field(j, "payoffs", "game");
  if (!table.is_array() || table.empty()) {
    Malformed("game \"payoffs\" must be a non-empty array of rows");
  }
  std::vector<std::vector<PayoffPair>> rows;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Json& row = table[r];
    if (!row.is_array()) {
      Malformed("game payoff row " + std::to_string(r) + " is not an array");
    }
    std::vector<PayoffPair> parsed;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string where =
          "game payoff (" + std::to_string(r) + "," + std::to_string(c) + ")";
      const Json& cell = row[c];
      if (!cell.is_array() || cell.size() != 2) {
        Malformed(where + " must be a [player1, player2] pair");
      }
      parsed.push_back({Number(cell[0], where), Number(cell[1], where)});
    }
    if (!rows.empty() && parsed.size() != rows.front().size()) {
      throw Error(ErrorCode::kInvalidGame,
                  "game payoff row " + std::to_string(r) + " has " +
                      std::to_string(parsed.size()) + " entries, expected " +
                      std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(parsed));
  }
  BimatrixGame g = BimatrixGame::FromMatrix(rows);
  if (j.contains("rows") || j.contains("cols")) {
    auto row_labels = j.contains("rows") ? Labels(j.at("rows"), "game \"rows\"")
                                         : g.row_labels();
    auto col_labels = j.contains("cols") ? Labels(j.at("cols"), "game \"cols\"")
                                         : g.col_labels();
    if (row_labels.size() != g.num_rows() ||
        col_labels.size() != g.num_cols()) {
      throw Error(ErrorCode::kInvalidGame,
                  "game labels (" + std::to_string(row_labels.size()) + "x" +
                      std::to_string(col_labels.size()) +
                      ") do not match payoff table (" +
                      std::to_string(g.num_rows()) + "x" +
                      std::to_string(g.num_cols()) + ")");
    }
    return g.WithLabels(std::move(row_labels), std::move(col_labels));
  }
  return g;
}

Json StateToJson(const StateVector& psi) {
  Json amplitudes = Json::array();
  for (const Complex& z : psi.amplitudes()) {
    amplitudes.push_back(Json::array({z.real(), z.imag()}));
  }
  return Json{{"dims", psi.dims()}, {"amplitudes", std::move(amplitudes)}};
}

StateVector StateFromJson(const Json& j) {
  const std::vector<std::size_t> dims =
      IndexList(Field(j, "dims", "state"), "state \"dims\"");
  const Json& amps = Field(j, "amplitudes", "state");
  if (!amps.is_array()) Malformed("state \"amplitudes\" must be an array");
  std::vector<Complex> amplitudes;
  for (std::size_t k = 0; k < amps.size(); ++k) {
    const std::string where = "state amplitude " + std::to_string(k);
    const Json& a = amps[k];
    if (a.is_number()) {
      amplitudes.emplace_back(a.get<double>(), 0.0);
    } else if (a.is_array() && a.size() == 2) {
      amplitudes.emplace_back(Number(a[0], where), Number(a[1], where));
    } else {
      Malformed(where + " must be a number or [re, im]");
    }
  }
  return StateVector(dims, std::move(amplitudes));
}

Json MappingToJson(const GameMapping& f) {
  return Json{{"eta", f.swaps_players() ? "swap" : "id"},
              {"phi1", f.phi1()},
              {"phi2", f.phi2()},
              {"phi1_cycles", CycleNotation(f.phi1())},
              {"phi2_cycles", CycleNotation(f.phi2())}};
}

GameMapping MappingFromJson(const Json& j) {
  const Json& eta = Field(j, "eta", "mapping");
  if (!eta.is_string() || (eta != "id" && eta != "swap")) {
    Malformed("mapping \"eta\" must be \"id\" or \"swap\"");
  }
  return GameMapping(
      eta == "swap" ? PlayerBijection::kSwap : PlayerBijection::kIdentity,
      IndexList(Field(j, "phi1", "mapping"), "mapping \"phi1\""),
      IndexList(Field(j, "phi2", "mapping"), "mapping \"phi2\""));
}

Json SchemeToJson(const SchemeConfig& scheme) {
  Json j{{"kind", SchemeKindName(scheme.kind)}};
  if (scheme.kind == SchemeKind::kMw) {
    j["ops1"] = scheme.ops1;
    j["ops2"] = scheme.ops2;
  }
  if (scheme.state) j["state"] = StateToJson(*scheme.state);
  return j;
}

SchemeConfig SchemeFromJson(const Json& j) {
  const Json& kind = Field(j, "kind", "scheme");
  if (!kind.is_string()) Malformed("scheme \"kind\" must be a string");
  const auto parsed = ParseSchemeKind(kind.get<std::string>());
  if (!parsed) {
    Malformed("unknown scheme \"" + kind.get<std::string>() + "\"");
  }
  SchemeConfig scheme{.kind = *parsed};
  for (auto [key, target] : {std::pair{"ops1", &scheme.ops1},
                              std::pair{"ops2", &scheme.ops2}}) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_string()) {
      Malformed(std::string("scheme \"") + key + "\" must be a string");
    }
    *target = j.at(key).get<std::string>();
  }
  if (j.contains("state")) scheme.state = StateFromJson(j.at("state"));
  return scheme;
}

Json ReportToJson(const InvarianceReport& report) {
  Json inputs = Json::array();
  for (const auto& f : report.input_isomorphisms) {
    inputs.push_back(MappingToJson(f.mapping()));
  }
  Json outputs = Json::array();
  for (const auto& f : report.output_isomorphisms) {
    outputs.push_back(MappingToJson(f.mapping()));
  }
  return Json{{"scheme", SchemeToJson(report.scheme)},
              {"verdict", VerdictName(report.verdict)},
              {"inputs_isomorphic", report.inputs_isomorphic},
              {"input_isomorphisms", std::move(inputs)},
              {"outputs_isomorphic", report.outputs_isomorphic},
              {"outputs_decided", report.outputs_decided},
              {"output_isomorphisms", std::move(outputs)},
              {"output1_pure_equilibria", report.output1_equilibria},
              {"output2_pure_equilibria", report.output2_equilibria},
              {"refuted_by_equilibria", report.refuted_by_equilibria},
              {"constructive_checked", report.constructive_checked},
              {"constructive_verified", report.constructive_verified},
              {"constructive_mapping",
               report.constructive_mapping
                   ? MappingToJson(*report.constructive_mapping)
                   : Json(nullptr)},
              {"output1", GameToJson(report.output1)},
              {"output2", GameToJson(report.output2)}};
}

Json CertificateToJson(const InvarianceCertificate& certificate) {
  return Json{{"scheme", SchemeToJson(certificate.scheme)},
              {"game1", GameToJson(certificate.game1)},
              {"game2", GameToJson(certificate.game2)},
              {"input_isomorphism", MappingToJson(certificate.input_isomorphism)},
              {"state", StateToJson(certificate.state)}};
}

InvarianceCertificate CertificateFromJson(const Json& j) {
  InvarianceCertificate c{
      .game1 = GameFromJson(Field(j, "game1", "certificate")),
      .game2 = GameFromJson(Field(j, "game2", "certificate")),
      .input_isomorphism =
          MappingFromJson(Field(j, "input_isomorphism", "certificate")),
      .state = StateFromJson(Field(j, "state", "certificate")),
      .scheme = SchemeFromJson(Field(j, "scheme", "certificate")),
  };
  c.scheme.state = c.state;
  return c;
}

Json SummaryToJson(const TrialSummary& summary) {
  Json certificates = Json::array();
  for (const auto& c : summary.certificates) {
    certificates.push_back(CertificateToJson(c));
  }
  return Json{{"trials", summary.trials},
              {"preserves", summary.preserves},
              {"violations", summary.violations},
              {"undecided", summary.undecided},
              {"constructive_checked", summary.constructive_checked},
              {"constructive_failures", summary.constructive_failures},
              {"certificates", std::move(certificates)}};
}

std::string FormatPayoff(double x) {
  char buffer[64];
  for (long q = 1; q <= kMaxDenominator; ++q) {
    const double scaled = x * static_cast<double>(q);
    const double p = std::round(scaled);
    if (std::abs(scaled - p) > kFractionTolerance * static_cast<double>(q)) {
      continue;
    }
    const long numerator = static_cast<long>(p);
    if (q == 1) return std::to_string(numerator);
    std::snprintf(buffer, sizeof(buffer), "%ld/%ld (%.6f)", numerator, q,
                  static_cast<double>(numerator) / static_cast<double>(q));
    return buffer;
  }
  std::snprintf(buffer, sizeof(buffer), "%.6g", x);
  return Trimmed(buffer);
}

std::string FormatGameTable(const BimatrixGame& g) {
  const std::size_t rows = g.num_rows();
  const std::size_t cols = g.num_cols();
  std::vector<std::vector<std::string>> cells(
      rows + 1, std::vector<std::string>(cols + 1));
  for (std::size_t c = 0; c < cols; ++c) cells[0][c + 1] = g.col_labels()[c];
  for (std::size_t r = 0; r < rows; ++r) {
    cells[r + 1][0] = g.row_labels()[r];
    for (std::size_t c = 0; c < cols; ++c) {
      cells[r + 1][c + 1] = "(" + FormatPayoff(g.at(r, c).row) + ", " +
                            FormatPayoff(g.at(r, c).col) + ")";
    }
  }
  std::vector<std::size_t> width(cols + 1, 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c <= cols; ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::ostringstream out;
  for (const auto& line : cells) {
    std::string text;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c > 0) text += "  ";
      text += line[c];
      text.append(width[c] - line[c].size(), ' ');
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
  return out.str();
}

}  // namespace qgi
