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

#ifndef QGI_ERRORS_H_
#define QGI_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qgi {

enum class ErrorCode {
  kDimensionMismatch,
  kNonRealResult,
  kBadFactorIndex,
  kUnnormalizedState,
  kNotADensityOperator,
  kIndexOutOfRange,
  kInvalidGame,
  kShapeMismatch,
  kNotABijection,
  kNonPermutationMapping,
  kSizeLimit,
  kInternalState,
  kInvalidArgument,
  kParse,
};

constexpr std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonRealResult: return "NonRealResult";
    case ErrorCode::kBadFactorIndex: return "BadFactorIndex";
    case ErrorCode::kUnnormalizedState: return "UnnormalizedState";
    case ErrorCode::kNotADensityOperator: return "NotADensityOperator";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidGame: return "InvalidGame";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNotABijection: return "NotABijection";
    case ErrorCode::kNonPermutationMapping: return "NonPermutationMapping";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kInternalState: return "InternalStateError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qgi

#endif  // QGI_ERRORS_H_
