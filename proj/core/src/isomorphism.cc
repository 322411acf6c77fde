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

#include "qgi/isomorphism.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <utility>

#include "qgi/errors.h"

namespace qgi {

bool IsPermutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t image : p) {
    if (image >= p.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

Permutation IdentityPermutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation Inverse(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

Permutation Compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "composing permutations of different degree");
  }
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

std::vector<Permutation> AllPermutations(std::size_t n) {
  std::vector<Permutation> all;
  Permutation p = IdentityPermutation(n);
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

std::string CycleNotation(const Permutation& p) {
  std::ostringstream out;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == start) continue;
    any = true;
    out << '(';
    std::size_t i = start;
    bool first = true;
    while (!done[i]) {
      done[i] = true;
      if (!first) out << ' ';
      out << i;
      first = false;
      i = p[i];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

GameMapping::GameMapping(PlayerBijection players, Permutation phi1,
                         Permutation phi2)
    : players_(players), phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
  if (!IsPermutation(phi1_) || !IsPermutation(phi2_)) {
    throw Error(ErrorCode::kNotABijection,
                "strategy mapping is not a bijection");
  }
}

GameMapping GameMapping::Identity(std::size_t rows, std::size_t cols) {
  return GameMapping(PlayerBijection::kIdentity, IdentityPermutation(rows),
                     IdentityPermutation(cols));
}

GameMapping GameMapping::PlayerSwap(std::size_t rows, std::size_t cols) {
  return GameMapping(PlayerBijection::kSwap, IdentityPermutation(rows),
                     IdentityPermutation(cols));
}

PureProfile GameMapping::Apply(const PureProfile& p) const {
  if (p.row >= phi1_.size() || p.col >= phi2_.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "profile (" + std::to_string(p.row) + "," +
                    std::to_string(p.col) + ") outside mapping domain " +
                    std::to_string(phi1_.size()) + "x" +
                    std::to_string(phi2_.size()));
  }
  if (swaps_players()) return {phi2_[p.col], phi1_[p.row]};
  return {phi1_[p.row], phi2_[p.col]};
}

GameMapping GameMapping::Inverse() const {
  if (swaps_players()) {
    return GameMapping(players_, qgi::Inverse(phi2_), qgi::Inverse(phi1_));
  }
  return GameMapping(players_, qgi::Inverse(phi1_), qgi::Inverse(phi2_));
}

GameMapping GameMapping::Then(const GameMapping& next) const {
  // Player i goes to eta(i) via phi_i, then to eta'(eta(i)) via
  // next.phi_{eta(i)}.
  const Permutation& next_for_1 = swaps_players() ? next.phi2_ : next.phi1_;
  const Permutation& next_for_2 = swaps_players() ? next.phi1_ : next.phi2_;
  const PlayerBijection players = (swaps_players() != next.swaps_players())
                                      ? PlayerBijection::kSwap
                                      : PlayerBijection::kIdentity;
  return GameMapping(players, Compose(next_for_1, phi1_),
                     Compose(next_for_2, phi2_));
}

namespace {

void CheckMappingShape(const BimatrixGame& g, const BimatrixGame& g2,
                       const GameMapping& f) {
  if (f.source_rows() != g.num_rows() || f.source_cols() != g.num_cols() ||
      f.target_rows() != g2.num_rows() || f.target_cols() != g2.num_cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "mapping " + std::to_string(f.source_rows()) + "x" +
                    std::to_string(f.source_cols()) + " -> " +
                    std::to_string(f.target_rows()) + "x" +
                    std::to_string(f.target_cols()) + " does not fit games " +
                    std::to_string(g.num_rows()) + "x" +
                    std::to_string(g.num_cols()) + " and " +
                    std::to_string(g2.num_rows()) + "x" +
                    std::to_string(g2.num_cols()));
  }
}

// Payoffs are quantized to a 1e-6 grid before they are used as fingerprints,
// so values within kPayoffTolerance of each other share a bucket except at
// grid boundaries.
using PayoffKey = std::pair<std::int64_t, std::int64_t>;

PayoffKey Quantize(const PayoffPair& p) {
  return {std::llround(p.row * 1e6), std::llround(p.col * 1e6)};
}

std::vector<std::vector<PayoffKey>> RowFingerprints(const BimatrixGame& g) {
  std::vector<std::vector<PayoffKey>> fps(g.num_rows());
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      fps[r].push_back(Quantize(g.at(r, c)));
    }
    std::sort(fps[r].begin(), fps[r].end());
  }
  return fps;
}

std::vector<std::vector<PayoffKey>> ColFingerprints(const BimatrixGame& g) {
  std::vector<std::vector<PayoffKey>> fps(g.num_cols());
  for (std::size_t c = 0; c < g.num_cols(); ++c) {
    for (std::size_t r = 0; r < g.num_rows(); ++r) {
      fps[c].push_back(Quantize(g.at(r, c)));
    }
    std::sort(fps[c].begin(), fps[c].end());
  }
  return fps;
}

// Backtracking search for identity-eta isomorphisms g -> h. Rows are fixed
// first in ascending order; every row choice narrows the set of admissible
// column images, and the columns are matched once all rows are placed.
class IdentityEtaSearch {
 public:
  IdentityEtaSearch(const BimatrixGame& g, const BimatrixGame& h,
                    std::size_t limit)
      : g_(g), h_(h), limit_(limit) {}

  std::vector<std::pair<Permutation, Permutation>> Run() {
    results_.clear();
    if (g_.num_rows() != h_.num_rows() || g_.num_cols() != h_.num_cols()) {
      return results_;
    }
    const std::size_t rows = g_.num_rows();
    const std::size_t cols = g_.num_cols();
    const auto g_row_fp = RowFingerprints(g_);
    const auto h_row_fp = RowFingerprints(h_);
    const auto g_col_fp = ColFingerprints(g_);
    const auto h_col_fp = ColFingerprints(h_);

    row_candidates_.assign(rows, {});
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t t = 0; t < rows; ++t) {
        if (g_row_fp[r] == h_row_fp[t]) row_candidates_[r].push_back(t);
      }
      if (row_candidates_[r].empty()) return results_;
    }
    Feasible col_feasible(cols, std::vector<char>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) {
      bool any = false;
      for (std::size_t t = 0; t < cols; ++t) {
        col_feasible[c][t] = g_col_fp[c] == h_col_fp[t];
        any = any || col_feasible[c][t];
      }
      if (!any) return results_;
    }
    phi1_.assign(rows, 0);
    row_used_.assign(rows, false);
    AssignRow(0, col_feasible);
    return results_;
  }

 private:
  using Feasible = std::vector<std::vector<char>>;

  bool Done() const { return limit_ != 0 && results_.size() >= limit_; }

  void AssignRow(std::size_t r, const Feasible& col_feasible) {
    if (Done()) return;
    if (r == g_.num_rows()) {
      phi2_.assign(g_.num_cols(), 0);
      col_used_.assign(g_.num_cols(), false);
      AssignCol(0, col_feasible);
      return;
    }
    for (std::size_t t : row_candidates_[r]) {
      if (row_used_[t]) continue;
      Feasible narrowed = col_feasible;
      bool ok = true;
      for (std::size_t c = 0; c < g_.num_cols() && ok; ++c) {
        bool any = false;
        for (std::size_t u = 0; u < g_.num_cols(); ++u) {
          if (!narrowed[c][u]) continue;
          if (!ApproxEqual(g_.at(r, c), h_.at(t, u))) {
            narrowed[c][u] = 0;
          } else {
            any = true;
          }
        }
        ok = any;
      }
      if (!ok) continue;
      row_used_[t] = true;
      phi1_[r] = t;
      AssignRow(r + 1, narrowed);
      row_used_[t] = false;
      if (Done()) return;
    }
  }

  void AssignCol(std::size_t c, const Feasible& col_feasible) {
    if (Done()) return;
    if (c == g_.num_cols()) {
      results_.emplace_back(phi1_, phi2_);
      return;
    }
    for (std::size_t u = 0; u < g_.num_cols(); ++u) {
      if (col_used_[u] || !col_feasible[c][u]) continue;
      col_used_[u] = true;
      phi2_[c] = u;
      AssignCol(c + 1, col_feasible);
      col_used_[u] = false;
      if (Done()) return;
    }
  }

  const BimatrixGame& g_;
  const BimatrixGame& h_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> row_candidates_;
  Permutation phi1_;
  Permutation phi2_;
  std::vector<bool> row_used_;
  std::vector<bool> col_used_;
  std::vector<std::pair<Permutation, Permutation>> results_;
};

}  // namespace

bool VerifyIsomorphism(const BimatrixGame& g, const BimatrixGame& g2,
                       const GameMapping& f, double tol) {
  CheckMappingShape(g, g2, f);
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const PayoffPair& source = g.at(r, c);
      const PureProfile image = f.Apply({r, c});
      PayoffPair target = g2.at(image.row, image.col);
      if (f.swaps_players()) std::swap(target.row, target.col);
      if (!ApproxEqual(source, target, tol)) return false;
    }
  }
  return true;
}

std::optional<StrongIsomorphism> StrongIsomorphism::Certify(
    const BimatrixGame& g, const BimatrixGame& g2, GameMapping mapping) {
  if (!VerifyIsomorphism(g, g2, mapping)) return std::nullopt;
  return StrongIsomorphism(std::move(mapping));
}

std::vector<StrongIsomorphism> FindIsomorphisms(
    const BimatrixGame& g, const BimatrixGame& g2,
    const IsomorphismSearchOptions& options) {
  std::vector<StrongIsomorphism> found;
  auto collect = [&](const BimatrixGame& target, PlayerBijection players) {
    const std::size_t remaining =
        options.limit == 0 ? 0 : options.limit - found.size();
    IdentityEtaSearch search(g, target, remaining);
    for (auto& [phi1, phi2] : search.Run()) {
      GameMapping mapping(players, std::move(phi1), std::move(phi2));
      auto iso = StrongIsomorphism::Certify(g, g2, std::move(mapping));
      if (!iso) {
        throw Error(ErrorCode::kInternalState,
                    "search produced an unverifiable mapping");
      }
      found.push_back(std::move(*iso));
    }
  };
  collect(g2, PlayerBijection::kIdentity);
  const bool swap_fits =
      g.num_rows() == g2.num_cols() && g.num_cols() == g2.num_rows();
  if (options.allow_player_swap && swap_fits &&
      (options.limit == 0 || found.size() < options.limit)) {
    // Isomorphisms g -> swap(g2) with identity eta are exactly the
    // player-swapping isomorphisms g -> g2 with the same phi.
    collect(SwapPlayers(g2), PlayerBijection::kSwap);
  }
  return found;
}

bool AreIsomorphic(const BimatrixGame& g, const BimatrixGame& g2) {
  return !FindIsomorphisms(g, g2, {.limit = 1}).empty();
}

bool CheckLemma1(const BimatrixGame& g, const BimatrixGame& g2,
                 const StrongIsomorphism& f) {
  std::vector<PureProfile> image;
  for (const PureProfile& p : FindPureNash(g)) {
    image.push_back(f.mapping().Apply(p));
  }
  std::sort(image.begin(), image.end());
  return image == FindPureNash(g2);
}

BimatrixGame RelabelGame(const BimatrixGame& g, const GameMapping& f) {
  if (f.source_rows() != g.num_rows() || f.source_cols() != g.num_cols()) {
    throw Error(ErrorCode::kShapeMismatch, "mapping does not fit game");
  }
  const std::size_t rows = f.target_rows();
  const std::size_t cols = f.target_cols();
  std::vector<std::string> row_labels(rows);
  std::vector<std::string> col_labels(cols);
  // Player i's strategy k lands at index phi_i(k) of player eta(i).
  auto& labels_of_1 = f.swaps_players() ? col_labels : row_labels;
  auto& labels_of_2 = f.swaps_players() ? row_labels : col_labels;
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    labels_of_1[f.phi1()[r]] = g.row_labels()[r];
  }
  for (std::size_t c = 0; c < g.num_cols(); ++c) {
    labels_of_2[f.phi2()[c]] = g.col_labels()[c];
  }
  std::vector<PayoffPair> payoffs(rows * cols);
  for (std::size_t r = 0; r < g.num_rows(); ++r) {
    for (std::size_t c = 0; c < g.num_cols(); ++c) {
      const PureProfile image = f.Apply({r, c});
      PayoffPair p = g.at(r, c);
      if (f.swaps_players()) std::swap(p.row, p.col);
      payoffs[image.row * cols + image.col] = p;
    }
  }
  return BimatrixGame(std::move(row_labels), std::move(col_labels),
                      std::move(payoffs));
}

GameMapping RandomRelabelling(std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng) {
  Permutation phi1 = IdentityPermutation(rows);
  Permutation phi2 = IdentityPermutation(cols);
  std::shuffle(phi1.begin(), phi1.end(), rng);
  std::shuffle(phi2.begin(), phi2.end(), rng);
  return GameMapping(PlayerBijection::kIdentity, std::move(phi1),
                     std::move(phi2));
}

std::string Describe(const GameMapping& f, const BimatrixGame& g,
                     const BimatrixGame& g2) {
  CheckMappingShape(g, g2, f);
  const auto& target_1 = f.swaps_players() ? g2.col_labels() : g2.row_labels();
  const auto& target_2 = f.swaps_players() ? g2.row_labels() : g2.col_labels();
  std::ostringstream out;
  out << "eta: " << (f.swaps_players() ? "(1 2)" : "id") << '\n';
  auto describe_phi = [&](const char* name, const Permutation& phi,
                          const std::vector<std::string>& source,
                          const std::vector<std::string>& target) {
    out << name << ": " << CycleNotation(phi) << "  [";
    for (std::size_t k = 0; k < phi.size(); ++k) {
      if (k > 0) out << ", ";
      out << source[k] << " -> " << target[phi[k]];
    }
    out << "]\n";
  };
  describe_phi("phi1", f.phi1(), g.row_labels(), target_1);
  describe_phi("phi2", f.phi2(), g.col_labels(), target_2);
  return out.str();
}

}  // namespace qgi
