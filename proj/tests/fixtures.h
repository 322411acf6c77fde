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

#ifndef QGI_TESTS_FIXTURES_H_
#define QGI_TESTS_FIXTURES_H_

#include <cmath>

#include "qgi/games.h"
#include "qgi/linalg.h"

namespace qgi::testing {

// Chicken and its counterpart with player 2's strategies exchanged.
inline BimatrixGame Chicken1() {
  return BimatrixGame({"t", "b"}, {"l", "r"},
                      {{6, 6}, {2, 7}, {7, 2}, {0, 0}});
}

inline BimatrixGame Chicken2() {
  return BimatrixGame({"t'", "b'"}, {"l'", "r'"},
                      {{2, 7}, {6, 6}, {0, 0}, {7, 2}});
}

// (|00> + |01> + |10>) / sqrt(3)
inline StateVector Sqrt3State() {
  const double a = 1.0 / std::sqrt(3.0);
  return StateVector({2, 2}, {a, a, a, 0.0});
}

// 2x3 games that differ by exchanging the first two columns.
inline BimatrixGame ThreeColumnGame() {
  return BimatrixGame({"t", "b"}, {"l", "m", "r"},
                      {{4, 8}, {0, 0}, {8, 8}, {0, 4}, {4, 0}, {8, 0}});
}

inline BimatrixGame ThreeColumnGamePrime() {
  return BimatrixGame({"t'", "b'"}, {"l'", "m'", "r'"},
                      {{0, 0}, {4, 8}, {8, 8}, {4, 0}, {0, 4}, {8, 0}});
}

// (1/2)|00> + (sqrt(3)/2)|12> in C^2 (x) C^3.
inline StateVector QutritState() {
  std::vector<Complex> amps(6);
  amps[0] = 0.5;
  amps[5] = std::sqrt(3.0) / 2.0;
  return StateVector({2, 3}, amps);
}

// Two non-isomorphic games with the same MW output on a Bell state.
inline BimatrixGame ConverseGame1() {
  return BimatrixGame({"t", "b"}, {"l", "r"},
                      {{3, 1}, {0, 0}, {0, 0}, {1, 3}});
}

inline BimatrixGame ConverseGame2() {
  return BimatrixGame({"t'", "b'"}, {"l'", "r"},
                      {{4, 0}, {0, 0}, {0, 0}, {0, 4}});
}

// (|00> + |11>) / sqrt(2)
inline StateVector BellState() {
  const double a = 1.0 / std::sqrt(2.0);
  return StateVector({2, 2}, {a, 0.0, 0.0, a});
}

}  // namespace qgi::testing

#endif  // QGI_TESTS_FIXTURES_H_
