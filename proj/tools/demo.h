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

#ifndef QGI_TOOLS_DEMO_H_
#define QGI_TOOLS_DEMO_H_

#include <string>

#include "qgi/io.h"

namespace qgi::cli {

// Regenerates the worked examples under `dir`:
//   example1/        Chicken pair under the refined and correlated schemes
//   example2/        2x3 pair under {1,C,D}, {1,V1,V2} and all permutations
//   counterexample/  non-isomorphic pair with identical MW outputs
// Returns an index of written files and verdicts. Output is byte-stable.
Json WriteDemo(const std::string& dir);

}  // namespace qgi::cli

#endif  // QGI_TOOLS_DEMO_H_
