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

#include "qgi/linalg.h"

#include <cmath>
#include <random>

#include "fixtures.h"
#include "gtest/gtest.h"
#include "qgi/errors.h"
#include "qgi/operators.h"

namespace qgi {
namespace {

constexpr double kTol = 1e-12;

ComplexMatrix RandomMatrix(std::size_t rows, std::size_t cols,
                           std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<Complex> entries(rows * cols);
  for (Complex& z : entries) z = Complex(normal(rng), normal(rng));
  return ComplexMatrix(rows, cols, std::move(entries));
}

DensityOperator RandomMixedState(std::size_t d1, std::size_t d2,
                                 std::mt19937_64& rng) {
  // rho = A A^dagger / tr(A A^dagger) is a generic full-rank state.
  const ComplexMatrix a = RandomMatrix(d1 * d2, d1 * d2, rng);
  ComplexMatrix rho = a * Dagger(a);
  rho = Complex{1.0 / Trace(rho).real()} * rho;
  // Symmetrize away rounding so the Hermitian check is exact.
  rho = Complex{0.5} * (rho + Dagger(rho));
  return DensityOperator(rho.WithFactorDims({d1, d2}));
}

void ExpectMatrixNear(const ComplexMatrix& a, const ComplexMatrix& b,
                      double tol = kTol) {
  ASSERT_EQ(a.rows(), b.rows());
  ASSERT_EQ(a.cols(), b.cols());
  EXPECT_LE(MaxAbsDiff(a, b), tol);
}

TEST(TensorTest, IdentityTimesIdentityIsIdentity) {
  const ComplexMatrix id4 =
      Tensor(ComplexMatrix::Identity(2), ComplexMatrix::Identity(2));
  EXPECT_EQ(id4.factor_dims(), (std::vector<std::size_t>{2, 2}));
  ExpectMatrixNear(id4.WithFactorDims({}),
                   ComplexMatrix::Identity(4).WithFactorDims({}));
}

TEST(TensorTest, SigmaXOnFirstQubitFlipsIt) {
  const ComplexMatrix op = Tensor(PauliX(), ComplexMatrix::Identity(2));
  const StateVector ket00 = StateVector::Basis({2, 2}, 0);
  std::vector<Complex> out(4);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r] += op(r, c) * ket00[c];
  }
  EXPECT_EQ(out, (std::vector<Complex>{0.0, 0.0, 1.0, 0.0}));
}

TEST(TensorTest, ProjectorProductIsRankOneOn01) {
  const ComplexMatrix p = Tensor(Projector0(), Projector1());
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(p(r, c), (r == 1 && c == 1) ? Complex{1.0} : Complex{});
    }
  }
}

TEST(TensorTest, Associative) {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = RandomMatrix(2, 3, rng);
  const ComplexMatrix b = RandomMatrix(3, 2, rng);
  const ComplexMatrix c = RandomMatrix(2, 2, rng);
  ExpectMatrixNear(Tensor(Tensor(a, b), c), Tensor(a, Tensor(b, c)));
}

TEST(TensorTest, ConcatenatesFactorDims) {
  const ComplexMatrix t =
      Tensor({ComplexMatrix::Identity(2), ComplexMatrix::Identity(3),
              ComplexMatrix::Identity(2)});
  EXPECT_EQ(t.factor_dims(), (std::vector<std::size_t>{2, 3, 2}));
}

TEST(ComplexMatrixTest, MismatchedFactorStructureIsRejected) {
  const ComplexMatrix a = ComplexMatrix::Identity(6).WithFactorDims({2, 3});
  const ComplexMatrix b = ComplexMatrix::Identity(6).WithFactorDims({3, 2});
  EXPECT_THROW(a * b, Error);
  EXPECT_THROW(ComplexMatrix::Identity(4).WithFactorDims({3}), Error);
}

TEST(DaggerTest, IdentityAndSigmaXAreSelfAdjoint) {
  EXPECT_EQ(Dagger(ComplexMatrix::Identity(3)), ComplexMatrix::Identity(3));
  EXPECT_EQ(Dagger(PauliX()), PauliX());
}

TEST(DaggerTest, ConjugateTransposeOfKnownMatrix) {
  const ComplexMatrix a(3, 3,
                        {{1, 2}, {3, 0}, {0, -1},  //
                         {4, 4}, {5, 0}, {6, 1},   //
                         {0, 0}, {7, -2}, {8, 3}});
  const ComplexMatrix expected(3, 3,
                               {{1, -2}, {4, -4}, {0, 0},  //
                                {3, 0}, {5, 0}, {7, 2},    //
                                {0, 1}, {6, -1}, {8, -3}});
  EXPECT_EQ(Dagger(a), expected);
  EXPECT_EQ(Dagger(Dagger(a)), a);
}

TEST(DaggerTest, BuiltInOperatorSetsAreUnitary) {
  for (const OperatorSet& set :
       {IdentitySigmaOperators(), IqbalOperators(), CyclicOperators(4),
        PermutationOperators(3)}) {
    for (const ComplexMatrix& u : set.operators()) {
      ExpectMatrixNear((Dagger(u) * u).WithFactorDims({}),
                       ComplexMatrix::Identity(u.rows()).WithFactorDims({}));
    }
  }
}

TEST(TraceProductTest, BasisStateExpectation) {
  const DensityOperator rho =
      DensityOperator::FromPureState(StateVector::Basis({2, 2}, 0));
  const std::vector<double> diag{3.5, -1.0, 2.0, 9.0};
  EXPECT_NEAR(TraceProduct(rho, ComplexMatrix::Diagonal(diag, {2, 2})), 3.5,
              kTol);
}

TEST(TraceProductTest, MatchesMultiplyThenTrace) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = RandomMixedState(2, 3, rng);
    ComplexMatrix m = RandomMatrix(6, 6, rng);
    m = Complex{0.5} * (m + Dagger(m));
    // Naive route: form the product, then sum its diagonal.
    Complex naive{};
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t k = 0; k < 6; ++k) {
        naive += rho.matrix()(i, k) * m(k, i);
      }
    }
    EXPECT_NEAR(TraceProduct(rho, m), naive.real(), 1e-12);
  }
}

TEST(TraceProductTest, IdentityGivesOne) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityOperator rho = RandomMixedState(2, 2, rng);
    EXPECT_NEAR(TraceProduct(rho, ComplexMatrix::Identity(4)), 1.0, kTol);
  }
}

TEST(TraceProductTest, Errors) {
  const DensityOperator rho =
      DensityOperator::FromPureState(StateVector::Basis({2, 2}, 0));
  try {
    TraceProduct(rho, ComplexMatrix::Identity(3));
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  ComplexMatrix skew = ComplexMatrix::Identity(4);
  skew(0, 1) = Complex(0.0, 1.0);
  try {
    TraceProduct(rho, skew);
    FAIL() << "expected NonRealResult";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonRealResult);
  }
}

TEST(PartialTraceTest, BellStateReducesToMaximallyMixed) {
  const DensityOperator rho =
      DensityOperator::FromPureState(testing::BellState());
  for (std::size_t keep : {0u, 1u}) {
    const DensityOperator reduced = PartialTrace(rho, keep);
    ExpectMatrixNear(reduced.matrix().WithFactorDims({}),
                     (Complex{0.5} * ComplexMatrix::Identity(2))
                         .WithFactorDims({}));
  }
}

TEST(PartialTraceTest, GeneralTwoQubitFormulas) {
  const Complex alpha(0.3, 0.1), beta(-0.2, 0.4), gamma(0.5, -0.3),
      delta(0.1, 0.2);
  const StateVector psi =
      StateVector::Normalized({2, 2}, {alpha, beta, gamma, delta});
  const Complex a = psi[0], b = psi[1], g = psi[2], d = psi[3];
  const DensityOperator pure = DensityOperator::FromPureState(psi);

  const ComplexMatrix rho1 = PartialTrace(pure, 0).matrix();
  EXPECT_LE(std::abs(rho1(0, 0) - (std::norm(a) + std::norm(b))), kTol);
  EXPECT_LE(std::abs(rho1(0, 1) - (a * std::conj(g) + b * std::conj(d))),
            kTol);
  EXPECT_LE(std::abs(rho1(1, 0) - (g * std::conj(a) + d * std::conj(b))),
            kTol);
  EXPECT_LE(std::abs(rho1(1, 1) - (std::norm(g) + std::norm(d))), kTol);

  const ComplexMatrix rho2 = PartialTrace(pure, 1).matrix();
  EXPECT_LE(std::abs(rho2(0, 0) - (std::norm(a) + std::norm(g))), kTol);
  EXPECT_LE(std::abs(rho2(0, 1) - (a * std::conj(b) + g * std::conj(d))),
            kTol);
  EXPECT_LE(std::abs(rho2(1, 0) - (b * std::conj(a) + d * std::conj(g))),
            kTol);
  EXPECT_LE(std::abs(rho2(1, 1) - (std::norm(b) + std::norm(d))), kTol);
}

TEST(PartialTraceTest, ReducedStatesAreHermitianWithUnitTrace) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityOperator rho = RandomMixedState(2, 3, rng);
    for (std::size_t keep : {0u, 1u}) {
      const DensityOperator reduced = PartialTrace(rho, keep);
      EXPECT_TRUE(IsHermitian(reduced.matrix()));
      EXPECT_NEAR(Trace(reduced.matrix()).real(), 1.0, kTol);
    }
  }
}

TEST(PartialTraceTest, BadFactorIndex) {
  const DensityOperator rho =
      DensityOperator::FromPureState(testing::BellState());
  try {
    PartialTrace(rho, 2);
    FAIL() << "expected BadFactorIndex";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBadFactorIndex);
  }
  const DensityOperator single =
      DensityOperator::FromPureState(StateVector::Basis({4}, 1));
  EXPECT_THROW(PartialTrace(single, 0), Error);
}

TEST(StateVectorTest, RejectsUnnormalizedAmplitudes) {
  try {
    StateVector({2, 2}, {1.0, 1.0, 0.0, 0.0});
    FAIL() << "expected UnnormalizedState";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnnormalizedState);
  }
  EXPECT_THROW(StateVector({2, 2}, {1.0, 0.0, 0.0}), Error);
}

TEST(StateVectorTest, SwapFactorsMovesAmplitudes) {
  const StateVector psi = testing::QutritState();  // 1/2|00> + s|12>
  const StateVector swapped = SwapFactors(psi);
  EXPECT_EQ(swapped.dims(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(swapped[0], psi[0]);
  EXPECT_EQ(swapped[2 * 2 + 1], psi[1 * 3 + 2]);  // |21> <- |12>
  EXPECT_EQ(SwapFactors(swapped), psi);
}

TEST(DensityOperatorTest, RejectsNonPositiveAndNonUnitTrace) {
  const std::vector<double> negative{1.5, -0.5};
  EXPECT_THROW(DensityOperator(ComplexMatrix::Diagonal(negative, {2})), Error);
  const std::vector<double> heavy{1.0, 1.0};
  EXPECT_THROW(DensityOperator(ComplexMatrix::Diagonal(heavy, {2})), Error);
}

}  // namespace
}  // namespace qgi
