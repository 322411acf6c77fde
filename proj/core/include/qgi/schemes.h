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

#ifndef QGI_SCHEMES_H_
#define QGI_SCHEMES_H_

#include <cstddef>
#include <string>
#include <vector>

#include "qgi/games.h"
#include "qgi/linalg.h"
#include "qgi/operators.h"

namespace qgi {

// Diagonal payoff observables on C^rows (x) C^cols:
// m1 = sum a_{xy} |xy><xy|, m2 = sum b_{xy} |xy><xy|.
struct PayoffObservables {
  ComplexMatrix m1;
  ComplexMatrix m2;
};

PayoffObservables BuildPayoffObservables(const BimatrixGame& g);

// ---------------------------------------------------------------------------
// Refined two-qubit scheme on (C^2)^{(x)4}. Player 1 picks P_i (x) U_j acting
// on qubits 1 and 3, player 2 picks P_k (x) U_l acting on qubits 2 and 4.
// Qubits 3 and 4 carry |Psi> only when both players choose P_1; otherwise
// they carry |00> and the classical game is played.

// H = (1 (x) 1 - |11><11|) (x) |00><00| + |11><11| (x) |Psi><Psi|, 16x16.
// Throws kUnnormalizedState / kDimensionMismatch unless psi is a normalized
// two-qubit state.
ComplexMatrix BuildRefinedOperator(const StateVector& psi);

// Strategy labels in the order P0(x)1, P0(x)sx, P1(x)1, P1(x)sx; the index of
// P_i (x) U_j is 2i + j.
std::vector<std::string> RefinedStrategyLabels();

class RefinedScheme {
 public:
  // Throws kShapeMismatch unless g is 2x2.
  RefinedScheme(BimatrixGame game, StateVector psi);

  const BimatrixGame& game() const { return game_; }
  const StateVector& initial_state() const { return psi_; }
  const ComplexMatrix& positive_operator() const { return h_; }

  // Expected payoffs for projector bits (i, k) and unitary bits (j, l), from
  // tr(rho_f M_1) and tr(rho_f M_2) with
  // rho_f = (P_i (x) P_k (x) U_j (x) U_l) H (...)^dagger.
  PayoffPair Payoffs(int i, int j, int k, int l) const;

  // The full 4x4 output game, evaluated profile by profile.
  BimatrixGame PayoffMatrix() const;

 private:
  BimatrixGame game_;
  StateVector psi_;
  ComplexMatrix h_;
  ComplexMatrix m1_;
  ComplexMatrix m2_;
};

PayoffPair RefinedPayoffs(const RefinedScheme& scheme, int i, int j, int k,
                          int l);

// Closed form of the refined output: X blocks copy the input game and the
// lower-right block holds Delta_{jl} = sum_{xy} |psi_xy|^2 X_{x^j, y^l}.
BimatrixGame RefinedMatrixOracle(const BimatrixGame& g,
                                 const StateVector& psi);

// ---------------------------------------------------------------------------
// Correlated variant: three strategies per player, P0(x)1, P0(x)sx, P1(x)1,
// and the reduced states of |Psi> in the mixed blocks.

// H' = |00><00|(x)|00><00| + |01><01|(x)|0><0|(x)rho_2
//    + |10><10|(x)rho_1(x)|0><0| + |11><11|(x)|Psi><Psi|.
ComplexMatrix BuildCorrelatedOperator(const StateVector& psi);

std::vector<std::string> CorrelatedStrategyLabels();

// s1, s2 in {0, 1, 2} index CorrelatedStrategyLabels(). Throws
// kIndexOutOfRange or kShapeMismatch.
PayoffPair CorrelatedPayoffs(const BimatrixGame& g, const StateVector& psi,
                             std::size_t s1, std::size_t s2);

BimatrixGame CorrelatedMatrixByTrace(const BimatrixGame& g,
                                     const StateVector& psi);
BimatrixGame CorrelatedMatrixOracle(const BimatrixGame& g,
                                    const StateVector& psi);

// ---------------------------------------------------------------------------
// Generic MW scheme: entry (a, b) is tr((U_a (x) V_b)|Psi><Psi|(...)^dagger M_i)
// for U_a in ops1, V_b in ops2. Throws kDimensionMismatch when the state,
// game and operator dimensions disagree.
BimatrixGame MwPayoffMatrix(const BimatrixGame& g, const StateVector& psi,
                            const OperatorSet& ops1, const OperatorSet& ops2);

// Closed form for permutation-matrix operator sets:
// sum_{xy} |psi_xy|^2 X_{pi_a(x), sigma_b(y)}. Throws kInvalidArgument if an
// operator is not a permutation matrix.
BimatrixGame MwPermutationOracle(const BimatrixGame& g, const StateVector& psi,
                                 const OperatorSet& ops1,
                                 const OperatorSet& ops2);

// Largest factor dimension for which the permutation scheme is materialized.
inline constexpr std::size_t kMaxPermutationDegree = 5;

// MW scheme whose strategy sets are all permutation matrices of each factor.
// Throws kSizeLimit above kMaxPermutationDegree strategies per player.
BimatrixGame GeneralizedMwGame(
    const BimatrixGame& g, const StateVector& psi,
    PermutationOrder order = PermutationOrder::kLexicographic);
BimatrixGame GeneralizedMwOracle(
    const BimatrixGame& g, const StateVector& psi,
    PermutationOrder order = PermutationOrder::kLexicographic);

}  // namespace qgi

#endif  // QGI_SCHEMES_H_
