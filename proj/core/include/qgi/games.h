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

#ifndef QGI_GAMES_H_
#define QGI_GAMES_H_

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qgi {

// Absolute tolerance for comparing payoffs.
inline constexpr double kPayoffTolerance = 1e-9;

struct PayoffPair {
  double row = 0.0;  // player 1
  double col = 0.0;  // player 2

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

bool ApproxEqual(const PayoffPair& a, const PayoffPair& b,
                 double tol = kPayoffTolerance);

struct PureProfile {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

// Two-player strategic-form game with finite strategy sets. Immutable.
class BimatrixGame {
 public:
  // `payoffs` is row-major with row_labels.size() * col_labels.size()
  // entries. Throws kInvalidGame on shape mismatch, empty strategy sets, or
  // duplicate labels within a player.
  BimatrixGame(std::vector<std::string> row_labels,
               std::vector<std::string> col_labels,
               std::vector<PayoffPair> payoffs);

  // Labels default to "r0", "r1", ... and "c0", "c1", ...
  static BimatrixGame FromMatrix(
      const std::vector<std::vector<PayoffPair>>& payoffs);

  std::size_t num_rows() const { return row_labels_.size(); }
  std::size_t num_cols() const { return col_labels_.size(); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<PayoffPair>& payoffs() const { return payoffs_; }

  const PayoffPair& at(std::size_t row, std::size_t col) const {
    return payoffs_[row * col_labels_.size() + col];
  }
  // Bounds-checked access; throws kIndexOutOfRange.
  const PayoffPair& PayoffAt(const PureProfile& p) const;

  BimatrixGame WithLabels(std::vector<std::string> row_labels,
                          std::vector<std::string> col_labels) const;

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<PayoffPair> payoffs_;
};

// All pure Nash equilibria in row-major order. A profile qualifies unless some
// unilateral deviation improves the deviator's payoff by more than `tol`.
std::vector<PureProfile> FindPureNash(const BimatrixGame& g,
                                      double tol = kPayoffTolerance);

// Renumbers the players: entry (j2, j1) of the result is (b_{j1j2}, a_{j1j2}).
BimatrixGame SwapPlayers(const BimatrixGame& g);

// Largest |difference| over both payoff components; throws kShapeMismatch
// when the shapes differ.
double MaxPayoffDiff(const BimatrixGame& a, const BimatrixGame& b);

}  // namespace qgi

#endif  // QGI_GAMES_H_
