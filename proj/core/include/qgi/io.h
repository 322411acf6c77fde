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

#ifndef QGI_IO_H_
#define QGI_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/isomorphism.h"
#include "qgi/linalg.h"

namespace qgi {

using Json = nlohmann::ordered_json;

// Parses JSON text; syntax errors become kParse with "<source>:line:col".
Json ParseJson(std::string_view text, std::string_view source = "<input>");
Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

// {"rows":["t","b"],"cols":["l","r"],"payoffs":[[[6,6],[2,7]],[[7,2],[0,0]]]}
// "rows"/"cols" may be omitted, in which case default labels are used.
Json GameToJson(const BimatrixGame& g);
BimatrixGame GameFromJson(const Json& j);

// {"dims":[2,2],"amplitudes":[[re,im],...]}; a bare number is accepted as a
// real amplitude.
Json StateToJson(const StateVector& psi);
StateVector StateFromJson(const Json& j);

Json MappingToJson(const GameMapping& f);
GameMapping MappingFromJson(const Json& j);

Json SchemeToJson(const SchemeConfig& scheme);
SchemeConfig SchemeFromJson(const Json& j);
Json ReportToJson(const InvarianceReport& report);
Json SummaryToJson(const TrialSummary& summary);
Json CertificateToJson(const InvarianceCertificate& certificate);
// Reads back a certificate written by CertificateToJson for replay.
InvarianceCertificate CertificateFromJson(const Json& j);

// Values within 1e-9 of p/q with q <= 64 print as "p/q (decimal)" (integers
// as plain "p"); anything else prints with 6 significant digits.
std::string FormatPayoff(double x);

// Bordered, column-aligned table of payoff pairs with strategy labels.
std::string FormatGameTable(const BimatrixGame& g);

}  // namespace qgi

#endif  // QGI_IO_H_
