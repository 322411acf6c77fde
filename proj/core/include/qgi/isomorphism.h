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

#ifndef QGI_ISOMORPHISM_H_
#define QGI_ISOMORPHISM_H_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qgi/games.h"

namespace qgi {

// A bijection on {0, ..., n-1} in one-line notation: image[i] = p(i).
using Permutation = std::vector<std::size_t>;

bool IsPermutation(const Permutation& p);
Permutation IdentityPermutation(std::size_t n);
Permutation Inverse(const Permutation& p);
// (outer o inner)(i) = outer(inner(i)).
Permutation Compose(const Permutation& outer, const Permutation& inner);
// All permutations of {0..n-1} in lexicographic one-line order.
std::vector<Permutation> AllPermutations(std::size_t n);
// "(0 1)(2 3)"; the identity prints as "()".
std::string CycleNotation(const Permutation& p);

enum class PlayerBijection { kIdentity, kSwap };

// (eta, phi_1, phi_2). phi_i maps player i's strategy indices in the source
// game to the strategy indices of player eta(i) in the target game.
class GameMapping {
 public:
  // Throws kNotABijection if either phi is not a permutation.
  GameMapping(PlayerBijection players, Permutation phi1, Permutation phi2);

  static GameMapping Identity(std::size_t rows, std::size_t cols);
  // eta swaps the players; each strategy keeps its index.
  static GameMapping PlayerSwap(std::size_t rows, std::size_t cols);

  PlayerBijection players() const { return players_; }
  bool swaps_players() const { return players_ == PlayerBijection::kSwap; }
  const Permutation& phi1() const { return phi1_; }
  const Permutation& phi2() const { return phi2_; }
  std::size_t source_rows() const { return phi1_.size(); }
  std::size_t source_cols() const { return phi2_.size(); }
  std::size_t target_rows() const {
    return swaps_players() ? phi2_.size() : phi1_.size();
  }
  std::size_t target_cols() const {
    return swaps_players() ? phi1_.size() : phi2_.size();
  }

  // Throws kShapeMismatch if p is outside the source shape.
  PureProfile Apply(const PureProfile& p) const;
  GameMapping Inverse() const;
  // The mapping `next o *this`.
  GameMapping Then(const GameMapping& next) const;

  friend bool operator==(const GameMapping&, const GameMapping&) = default;

 private:
  PlayerBijection players_;
  Permutation phi1_;
  Permutation phi2_;
};

// u_i(s) = u'_{eta(i)}(f(s)) at every profile, within `tol`. Throws
// kShapeMismatch if the mapping does not fit the two games.
bool VerifyIsomorphism(const BimatrixGame& g, const BimatrixGame& g2,
                       const GameMapping& f, double tol = kPayoffTolerance);

// A game mapping already checked to be a strong isomorphism.
class StrongIsomorphism {
 public:
  static std::optional<StrongIsomorphism> Certify(const BimatrixGame& g,
                                                  const BimatrixGame& g2,
                                                  GameMapping mapping);

  const GameMapping& mapping() const { return mapping_; }

  friend bool operator==(const StrongIsomorphism&,
                         const StrongIsomorphism&) = default;

 private:
  explicit StrongIsomorphism(GameMapping mapping)
      : mapping_(std::move(mapping)) {}
  GameMapping mapping_;
};

struct IsomorphismSearchOptions {
  // Stop after this many results; 0 means enumerate everything.
  std::size_t limit = 0;
  bool allow_player_swap = true;
};

// Every strong isomorphism g -> g2, ordered by player bijection (identity
// first), then phi1 and phi2 lexicographically.
std::vector<StrongIsomorphism> FindIsomorphisms(
    const BimatrixGame& g, const BimatrixGame& g2,
    const IsomorphismSearchOptions& options = {});

bool AreIsomorphic(const BimatrixGame& g, const BimatrixGame& g2);

// The image of FindPureNash(g) under f equals FindPureNash(g2).
bool CheckLemma1(const BimatrixGame& g, const BimatrixGame& g2,
                 const StrongIsomorphism& f);

// The game g2 that makes f an isomorphism g -> g2:
// u'_{eta(i)}(f(s)) = u_i(s). Labels follow the mapping.
BimatrixGame RelabelGame(const BimatrixGame& g, const GameMapping& f);

// Uniformly random strategy relabelling with identity player bijection.
GameMapping RandomRelabelling(std::size_t rows, std::size_t cols,
                              std::mt19937_64& rng);

std::string Describe(const GameMapping& f, const BimatrixGame& g,
                     const BimatrixGame& g2);

}  // namespace qgi

#endif  // QGI_ISOMORPHISM_H_
