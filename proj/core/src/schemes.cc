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

#include "qgi/schemes.h"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "qgi/errors.h"

namespace qgi {
namespace {

constexpr double kFinalTraceTolerance = 1e-9;

void RequireTwoQubitState(const StateVector& psi) {
  if (psi.dims() != std::vector<std::size_t>{2, 2}) {
    throw Error(ErrorCode::kDimensionMismatch,
                "scheme needs a two-qubit state with dims [2,2]");
  }
}

void RequireTwoByTwo(const BimatrixGame& g) {
  if (g.num_rows() != 2 || g.num_cols() != 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "scheme needs a 2x2 game, got " + std::to_string(g.num_rows()) +
                    "x" + std::to_string(g.num_cols()));
  }
}

ComplexMatrix Unitary(int bit) {
  return bit == 0 ? ComplexMatrix::Identity(2) : PauliX();
}

ComplexMatrix Projector(int bit) { return bit == 0 ? Projector0() : Projector1(); }

ComplexMatrix TwoQubitProjector(std::size_t index) {
  return StateVector::Basis({2, 2}, index).Projector();
}

// Conjugates `h` by `k`, renormalizes by the trace and measures both payoff
// observables.
PayoffPair MeasureFinalState(const ComplexMatrix& k, const ComplexMatrix& h,
                             const ComplexMatrix& m1,
                             const ComplexMatrix& m2) {
  ComplexMatrix rho = k * h * Dagger(k);
  const Complex tr = Trace(rho);
  if (std::abs(tr - Complex{1.0}) > kFinalTraceTolerance) {
    throw Error(ErrorCode::kInternalState,
                "final state has trace " + std::to_string(tr.real()));
  }
  const DensityOperator final_state(Complex{1.0 / tr.real()} * rho);
  return {TraceProduct(final_state, m1), TraceProduct(final_state, m2)};
}

PayoffPair Mix(const std::vector<std::pair<double, PayoffPair>>& terms) {
  PayoffPair out;
  for (const auto& [w, x] : terms) {
    out.row += w * x.row;
    out.col += w * x.col;
  }
  return out;
}

void RequirePsiMatchesGame(const BimatrixGame& g, const StateVector& psi) {
  if (psi.dims() != std::vector<std::size_t>{g.num_rows(), g.num_cols()}) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state dims do not match the " + std::to_string(g.num_rows()) +
                    "x" + std::to_string(g.num_cols()) + " game");
  }
}

void RequireOperatorDims(const BimatrixGame& g, const OperatorSet& ops1,
                         const OperatorSet& ops2) {
  if (ops1.dim() != g.num_rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "player 1 operator set '" + ops1.name() + "' acts on C^" +
                    std::to_string(ops1.dim()) + ", game has " +
                    std::to_string(g.num_rows()) + " rows");
  }
  if (ops2.dim() != g.num_cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "player 2 operator set '" + ops2.name() + "' acts on C^" +
                    std::to_string(ops2.dim()) + ", game has " +
                    std::to_string(g.num_cols()) + " columns");
  }
}

void RequirePermutationSize(const BimatrixGame& g) {
  if (g.num_rows() > kMaxPermutationDegree ||
      g.num_cols() > kMaxPermutationDegree) {
    throw Error(ErrorCode::kSizeLimit,
                "permutation scheme is limited to " +
                    std::to_string(kMaxPermutationDegree) +
                    " strategies per player");
  }
}

}  // namespace

PayoffObservables BuildPayoffObservables(const BimatrixGame& g) {
  std::vector<double> a;
  std::vector<double> b;
  for (const PayoffPair& p : g.payoffs()) {
    a.push_back(p.row);
    b.push_back(p.col);
  }
  std::vector<std::size_t> dims{g.num_rows(), g.num_cols()};
  return {ComplexMatrix::Diagonal(a, dims), ComplexMatrix::Diagonal(b, dims)};
}

ComplexMatrix BuildRefinedOperator(const StateVector& psi) {
  RequireTwoQubitState(psi);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2);
  const ComplexMatrix p11 = TwoQubitProjector(3);
  const ComplexMatrix p00 = TwoQubitProjector(0);
  return Tensor(Tensor(id2, id2) - p11, p00) + Tensor(p11, psi.Projector());
}

std::vector<std::string> RefinedStrategyLabels() {
  return {"P0(x)1", "P0(x)sx", "P1(x)1", "P1(x)sx"};
}

RefinedScheme::RefinedScheme(BimatrixGame game, StateVector psi)
    : game_(std::move(game)), psi_(std::move(psi)) {
  RequireTwoByTwo(game_);
  h_ = BuildRefinedOperator(psi_);
  const PayoffObservables obs = BuildPayoffObservables(game_);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2);
  m1_ = Tensor({id2, id2, obs.m1});
  m2_ = Tensor({id2, id2, obs.m2});
}

PayoffPair RefinedScheme::Payoffs(int i, int j, int k, int l) const {
  for (int bit : {i, j, k, l}) {
    if (bit != 0 && bit != 1) {
      throw Error(ErrorCode::kIndexOutOfRange, "strategy bits must be 0 or 1");
    }
  }
  const ComplexMatrix strategy =
      Tensor({Projector(i), Projector(k), Unitary(j), Unitary(l)});
  return MeasureFinalState(strategy, h_, m1_, m2_);
}

BimatrixGame RefinedScheme::PayoffMatrix() const {
  std::vector<PayoffPair> payoffs;
  for (int s1 = 0; s1 < 4; ++s1) {
    for (int s2 = 0; s2 < 4; ++s2) {
      payoffs.push_back(Payoffs(s1 / 2, s1 % 2, s2 / 2, s2 % 2));
    }
  }
  return BimatrixGame(RefinedStrategyLabels(), RefinedStrategyLabels(),
                      std::move(payoffs));
}

PayoffPair RefinedPayoffs(const RefinedScheme& scheme, int i, int j, int k,
                          int l) {
  return scheme.Payoffs(i, j, k, l);
}

BimatrixGame RefinedMatrixOracle(const BimatrixGame& g,
                                 const StateVector& psi) {
  RequireTwoByTwo(g);
  RequireTwoQubitState(psi);
  // Weights |alpha|^2, |beta|^2, |gamma|^2, |delta|^2 on |00>,|01>,|10>,|11>.
  std::array<double, 4> w{};
  for (std::size_t s = 0; s < 4; ++s) w[s] = std::norm(psi[s]);
  auto x = [&](int r, int c) { return g.at(r, c); };
  auto delta = [&](int j, int l) {
    return Mix({{w[0], x(j, l)},
                {w[1], x(j, l ^ 1)},
                {w[2], x(j ^ 1, l)},
                {w[3], x(j ^ 1, l ^ 1)}});
  };
  std::vector<PayoffPair> payoffs;
  for (int s1 = 0; s1 < 4; ++s1) {
    for (int s2 = 0; s2 < 4; ++s2) {
      const int i = s1 / 2, j = s1 % 2, k = s2 / 2, l = s2 % 2;
      payoffs.push_back(i == 1 && k == 1 ? delta(j, l) : x(j, l));
    }
  }
  return BimatrixGame(RefinedStrategyLabels(), RefinedStrategyLabels(),
                      std::move(payoffs));
}

ComplexMatrix BuildCorrelatedOperator(const StateVector& psi) {
  RequireTwoQubitState(psi);
  const DensityOperator pure = DensityOperator::FromPureState(psi);
  const ComplexMatrix rho1 = PartialTrace(pure, 0).matrix();
  const ComplexMatrix rho2 = PartialTrace(pure, 1).matrix();
  const ComplexMatrix p0 = Projector0();
  return Tensor(TwoQubitProjector(0), TwoQubitProjector(0)) +
         Tensor({TwoQubitProjector(1), p0, rho2}) +
         Tensor({TwoQubitProjector(2), rho1, p0}) +
         Tensor(TwoQubitProjector(3), psi.Projector());
}

std::vector<std::string> CorrelatedStrategyLabels() {
  return {"P0(x)1", "P0(x)sx", "P1(x)1"};
}

PayoffPair CorrelatedPayoffs(const BimatrixGame& g, const StateVector& psi,
                             std::size_t s1, std::size_t s2) {
  RequireTwoByTwo(g);
  if (s1 > 2 || s2 > 2) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "correlated strategies are indexed 0..2");
  }
  // Strategy s is P_{s/2} (x) U_{s%2}: 0 -> P0(x)1, 1 -> P0(x)sx, 2 -> P1(x)1.
  const int i = static_cast<int>(s1 / 2), j = static_cast<int>(s1 % 2);
  const int k = static_cast<int>(s2 / 2), l = static_cast<int>(s2 % 2);
  const ComplexMatrix h = BuildCorrelatedOperator(psi);
  const PayoffObservables obs = BuildPayoffObservables(g);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2);
  const ComplexMatrix strategy =
      Tensor({Projector(i), Projector(k), Unitary(j), Unitary(l)});
  return MeasureFinalState(strategy, h, Tensor({id2, id2, obs.m1}),
                           Tensor({id2, id2, obs.m2}));
}

BimatrixGame CorrelatedMatrixByTrace(const BimatrixGame& g,
                                     const StateVector& psi) {
  RequireTwoByTwo(g);
  const ComplexMatrix h = BuildCorrelatedOperator(psi);
  const PayoffObservables obs = BuildPayoffObservables(g);
  const ComplexMatrix id2 = ComplexMatrix::Identity(2);
  const ComplexMatrix m1 = Tensor({id2, id2, obs.m1});
  const ComplexMatrix m2 = Tensor({id2, id2, obs.m2});
  std::vector<PayoffPair> payoffs;
  for (int s1 = 0; s1 < 3; ++s1) {
    for (int s2 = 0; s2 < 3; ++s2) {
      const ComplexMatrix strategy = Tensor(
          {Projector(s1 / 2), Projector(s2 / 2), Unitary(s1 % 2),
           Unitary(s2 % 2)});
      payoffs.push_back(MeasureFinalState(strategy, h, m1, m2));
    }
  }
  return BimatrixGame(CorrelatedStrategyLabels(), CorrelatedStrategyLabels(),
                      std::move(payoffs));
}

BimatrixGame CorrelatedMatrixOracle(const BimatrixGame& g,
                                    const StateVector& psi) {
  RequireTwoByTwo(g);
  RequireTwoQubitState(psi);
  const double wa = std::norm(psi[0]);
  const double wb = std::norm(psi[1]);
  const double wg = std::norm(psi[2]);
  const double wd = std::norm(psi[3]);
  auto x = [&](int r, int c) { return g.at(r, c); };
  const PayoffPair d02 = Mix({{wa + wg, x(0, 0)}, {wb + wd, x(0, 1)}});
  const PayoffPair d12 = Mix({{wa + wg, x(1, 0)}, {wb + wd, x(1, 1)}});
  const PayoffPair d20 = Mix({{wa + wb, x(0, 0)}, {wg + wd, x(1, 0)}});
  const PayoffPair d21 = Mix({{wa + wb, x(0, 1)}, {wg + wd, x(1, 1)}});
  const PayoffPair d22 = Mix(
      {{wa, x(0, 0)}, {wb, x(0, 1)}, {wg, x(1, 0)}, {wd, x(1, 1)}});
  return BimatrixGame(CorrelatedStrategyLabels(), CorrelatedStrategyLabels(),
                      {x(0, 0), x(0, 1), d02,  //
                       x(1, 0), x(1, 1), d12,  //
                       d20, d21, d22});
}

BimatrixGame MwPayoffMatrix(const BimatrixGame& g, const StateVector& psi,
                            const OperatorSet& ops1, const OperatorSet& ops2) {
  RequirePsiMatchesGame(g, psi);
  RequireOperatorDims(g, ops1, ops2);
  const PayoffObservables obs = BuildPayoffObservables(g);
  const ComplexMatrix initial = psi.Projector();
  std::vector<PayoffPair> payoffs;
  payoffs.reserve(ops1.size() * ops2.size());
  for (const ComplexMatrix& u1 : ops1.operators()) {
    for (const ComplexMatrix& u2 : ops2.operators()) {
      payoffs.push_back(
          MeasureFinalState(Tensor(u1, u2), initial, obs.m1, obs.m2));
    }
  }
  return BimatrixGame(ops1.labels(), ops2.labels(), std::move(payoffs));
}

BimatrixGame MwPermutationOracle(const BimatrixGame& g, const StateVector& psi,
                                 const OperatorSet& ops1,
                                 const OperatorSet& ops2) {
  RequirePsiMatchesGame(g, psi);
  RequireOperatorDims(g, ops1, ops2);
  const auto perms1 = ops1.AsPermutations();
  const auto perms2 = ops2.AsPermutations();
  if (!perms1 || !perms2) {
    throw Error(ErrorCode::kInvalidArgument,
                "closed form needs permutation-matrix operators");
  }
  const std::size_t rows = g.num_rows();
  const std::size_t cols = g.num_cols();
  std::vector<PayoffPair> payoffs;
  for (const Permutation& pi : *perms1) {
    for (const Permutation& sigma : *perms2) {
      PayoffPair entry;
      for (std::size_t x = 0; x < rows; ++x) {
        for (std::size_t y = 0; y < cols; ++y) {
          const double w = std::norm(psi[x * cols + y]);
          const PayoffPair& p = g.at(pi[x], sigma[y]);
          entry.row += w * p.row;
          entry.col += w * p.col;
        }
      }
      payoffs.push_back(entry);
    }
  }
  return BimatrixGame(ops1.labels(), ops2.labels(), std::move(payoffs));
}

BimatrixGame GeneralizedMwGame(const BimatrixGame& g, const StateVector& psi,
                               PermutationOrder order) {
  RequirePermutationSize(g);
  return MwPayoffMatrix(g, psi, PermutationOperators(g.num_rows(), order),
                        PermutationOperators(g.num_cols(), order));
}

BimatrixGame GeneralizedMwOracle(const BimatrixGame& g, const StateVector& psi,
                                 PermutationOrder order) {
  RequirePermutationSize(g);
  return MwPermutationOracle(g, psi, PermutationOperators(g.num_rows(), order),
                             PermutationOperators(g.num_cols(), order));
}

}  // namespace qgi
