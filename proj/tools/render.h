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

#ifndef QGI_TOOLS_RENDER_H_
#define QGI_TOOLS_RENDER_H_

#include <string>

#include "qgi/games.h"
#include "qgi/invariance.h"
#include "qgi/io.h"
#include "qgi/isomorphism.h"

namespace qgi::cli {

// "(t, r)"
std::string ProfileText(const BimatrixGame& g, const PureProfile& p);

// "pure Nash equilibria (2): (t, r), (b, l)"
std::string NashLine(const BimatrixGame& g);

Json NashJson(const BimatrixGame& g);

// Human-readable invariance report ending in a "verdict: ..." line.
std::string ReportText(const InvarianceReport& report, const BimatrixGame& g,
                       const BimatrixGame& g2);

std::string SummaryText(const TrialSummary& summary);

// Overall verdict of a randomized run: VIOLATES if any trial violated,
// UNDECIDED-BY-SEARCH if any was undecided, else PRESERVES.
Verdict SummaryVerdict(const TrialSummary& summary);

// JSON documents are written pretty-printed with a trailing newline.
std::string JsonText(const Json& j);

}  // namespace qgi::cli

#endif  // QGI_TOOLS_RENDER_H_
