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

#ifndef QGI_TOOLS_CLI_H_
#define QGI_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qgi::cli {

inline constexpr int kExitOk = 0;
// A domain verdict the caller asked to treat as failure (--strict).
inline constexpr int kExitVerdict = 1;
// Bad arguments, unreadable or malformed input files, dimension errors.
inline constexpr int kExitInputError = 2;

// Runs one subcommand. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qgi::cli

#endif  // QGI_TOOLS_CLI_H_
