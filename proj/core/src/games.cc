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

#include "qgi/games.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "qgi/errors.h"

namespace qgi {
namespace {

void CheckLabels(const std::vector<std::string>& labels, const char* who) {
  if (labels.empty()) {
    throw Error(ErrorCode::kInvalidGame,
                std::string(who) + " has no strategies");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kInvalidGame,
                  std::string(who) + " label '" + label + "' is repeated");
    }
  }
}

std::vector<std::string> DefaultLabels(char prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(1, prefix) + std::to_string(i));
  }
  return labels;
}

}  // namespace

bool ApproxEqual(const PayoffPair& a, const PayoffPair& b, double tol) {
  return std::abs(a.row - b.row) <= tol && std::abs(a.col - b.col) <= tol;
}

BimatrixGame::BimatrixGame(std::vector<std::string> row_labels,
                           std::vector<std::string> col_labels,
                           std::vector<PayoffPair> payoffs)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      payoffs_(std::move(payoffs)) {
  CheckLabels(row_labels_, "player 1");
  CheckLabels(col_labels_, "player 2");
  if (payoffs_.size() != row_labels_.size() * col_labels_.size()) {
    throw Error(ErrorCode::kInvalidGame,
                "payoff table has " + std::to_string(payoffs_.size()) +
                    " entries, expected " +
                    std::to_string(row_labels_.size()) + "x" +
                    std::to_string(col_labels_.size()));
  }
  for (const PayoffPair& p : payoffs_) {
    if (!std::isfinite(p.row) || !std::isfinite(p.col)) {
      throw Error(ErrorCode::kInvalidGame, "payoffs must be finite");
    }
  }
}

BimatrixGame BimatrixGame::FromMatrix(
    const std::vector<std::vector<PayoffPair>>& payoffs) {
  if (payoffs.empty()) {
    throw Error(ErrorCode::kInvalidGame, "player 1 has no strategies");
  }
  const std::size_t cols = payoffs.front().size();
  std::vector<PayoffPair> flat;
  for (const auto& row : payoffs) {
    if (row.size() != cols) {
      throw Error(ErrorCode::kInvalidGame, "ragged payoff rows");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return BimatrixGame(DefaultLabels('r', payoffs.size()),
                      DefaultLabels('c', cols), std::move(flat));
}

const PayoffPair& BimatrixGame::PayoffAt(const PureProfile& p) const {
  if (p.row >= num_rows() || p.col >= num_cols()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "profile (" + std::to_string(p.row) + "," +
                    std::to_string(p.col) + ") outside " +
                    std::to_string(num_rows()) + "x" +
                    std::to_string(num_cols()) + " game");
  }
  return at(p.row, p.col);
}

BimatrixGame BimatrixGame::WithLabels(
    std::vector<std::string> row_labels,
    std::vector<std::string> col_labels) const {
  return BimatrixGame(std::move(row_labels), std::move(col_labels), payoffs_);
}

std::vector<PureProfile> FindPureNash(const BimatrixGame& g, double tol) {
  const std::size_t rows = g.num_rows();
  const std::size_t cols = g.num_cols();
  std::vector<double> best_row_payoff(cols,
                                      -std::numeric_limits<double>::infinity());
  std::vector<double> best_col_payoff(rows,
                                      -std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      best_row_payoff[c] = std::max(best_row_payoff[c], g.at(r, c).row);
      best_col_payoff[r] = std::max(best_col_payoff[r], g.at(r, c).col);
    }
  }
  std::vector<PureProfile> equilibria;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (g.at(r, c).row + tol >= best_row_payoff[c] &&
          g.at(r, c).col + tol >= best_col_payoff[r]) {
        equilibria.push_back({r, c});
      }
    }
  }
  return equilibria;
}

BimatrixGame SwapPlayers(const BimatrixGame& g) {
  std::vector<PayoffPair> swapped;
  swapped.reserve(g.payoffs().size());
  for (std::size_t c = 0; c < g.num_cols(); ++c) {
    for (std::size_t r = 0; r < g.num_rows(); ++r) {
      const PayoffPair& p = g.at(r, c);
      swapped.push_back({p.col, p.row});
    }
  }
  return BimatrixGame(g.col_labels(), g.row_labels(), std::move(swapped));
}

double MaxPayoffDiff(const BimatrixGame& a, const BimatrixGame& b) {
  if (a.num_rows() != b.num_rows() || a.num_cols() != b.num_cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(a.num_rows()) + "x" +
                    std::to_string(a.num_cols()) + " vs " +
                    std::to_string(b.num_rows()) + "x" +
                    std::to_string(b.num_cols()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.payoffs().size(); ++i) {
    worst = std::max({worst, std::abs(a.payoffs()[i].row - b.payoffs()[i].row),
                      std::abs(a.payoffs()[i].col - b.payoffs()[i].col)});
  }
  return worst;
}

}  // namespace qgi
