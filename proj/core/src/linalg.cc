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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "qgi/errors.h"

namespace qgi {
namespace {

std::size_t Product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                         std::multiplies<>());
}

std::string DimsString(const std::vector<std::size_t>& dims) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) out << ',';
    out << dims[i];
  }
  out << ']';
  return out.str();
}

void CheckFactorDims(std::size_t rows, std::size_t cols,
                     const std::vector<std::size_t>& factor_dims) {
  if (factor_dims.empty()) return;
  if (rows != cols || Product(factor_dims) != rows) {
    throw Error(ErrorCode::kDimensionMismatch,
                "factor dims " + DimsString(factor_dims) +
                    " incompatible with " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " matrix");
  }
}

void CheckSameShape(const ComplexMatrix& a, const ComplexMatrix& b,
                    const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

// Factor structure of a product or sum. A single-factor (or untracked) side
// adopts the other side's structure; two multi-factor structures must agree.
std::vector<std::size_t> MergeFactorDims(const ComplexMatrix& a,
                                         const ComplexMatrix& b,
                                         const char* op) {
  if (a.factor_dims().size() <= 1) return b.factor_dims();
  if (b.factor_dims().size() <= 1) return a.factor_dims();
  if (a.factor_dims() != b.factor_dims()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(op) + ": factor dims " +
                    DimsString(a.factor_dims()) + " vs " +
                    DimsString(b.factor_dims()));
  }
  return a.factor_dims();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries,
                             std::vector<std::size_t> factor_dims)
    : rows_(rows),
      cols_(cols),
      entries_(std::move(entries)),
      factor_dims_(std::move(factor_dims)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(rows_ * cols_) +
                    " entries, got " + std::to_string(entries_.size()));
  }
  CheckFactorDims(rows_, cols_, factor_dims_);
}

ComplexMatrix ComplexMatrix::Identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  m.factor_dims_ = {n};
  return m;
}

ComplexMatrix ComplexMatrix::Diagonal(std::span<const double> diagonal,
                                      std::vector<std::size_t> factor_dims) {
  const std::size_t n = diagonal.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = diagonal[i];
  CheckFactorDims(n, n, factor_dims);
  m.factor_dims_ = std::move(factor_dims);
  return m;
}

ComplexMatrix ComplexMatrix::WithFactorDims(
    std::vector<std::size_t> factor_dims) const {
  CheckFactorDims(rows_, cols_, factor_dims);
  ComplexMatrix m = *this;
  m.factor_dims_ = std::move(factor_dims);
  return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "multiply: " + std::to_string(a.rows_) + "x" +
                    std::to_string(a.cols_) + " by " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  if (out.rows_ == out.cols_) {
    out.factor_dims_ = MergeFactorDims(a, b, "multiply");
  }
  return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameShape(a, b, "add");
  ComplexMatrix out = a;
  out.factor_dims_ = MergeFactorDims(a, b, "add");
  for (std::size_t i = 0; i < out.entries_.size(); ++i) {
    out.entries_[i] += b.entries_[i];
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a + Complex{-1.0} * b;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (Complex& z : out.entries_) z *= s;
  return out;
}

ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  const std::size_t cols = a.cols() * b.cols();
  std::vector<Complex> entries(rows * cols);
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          entries[(ar * b.rows() + br) * cols + ac * b.cols() + bc] =
              s * b(br, bc);
        }
      }
    }
  }
  std::vector<std::size_t> dims;
  if (!a.factor_dims().empty() && !b.factor_dims().empty()) {
    dims = a.factor_dims();
    dims.insert(dims.end(), b.factor_dims().begin(), b.factor_dims().end());
  }
  return ComplexMatrix(rows, cols, std::move(entries), std::move(dims));
}

ComplexMatrix Tensor(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0) return ComplexMatrix::Identity(1);
  auto it = factors.begin();
  ComplexMatrix out = *it;
  for (++it; it != factors.end(); ++it) out = Tensor(out, *it);
  return out;
}

ComplexMatrix Dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  if (a.is_square()) return out.WithFactorDims(a.factor_dims());
  return out;
}

Complex Trace(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "trace of non-square matrix");
  }
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameShape(a, b, "compare");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool IsHermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

bool IsUnitary(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  const ComplexMatrix product = Dagger(a) * a;
  return MaxAbsDiff(product.WithFactorDims({}),
                    ComplexMatrix::Identity(a.rows()).WithFactorDims({})) <=
         tol;
}

bool IsDiagonal(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c && std::abs(a(r, c)) > tol) return false;
    }
  }
  return true;
}

double MinProbeExpectation(const ComplexMatrix& a, int probes,
                           std::uint64_t seed) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch, "probe of non-square matrix");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const std::size_t n = a.rows();
  double worst = std::numeric_limits<double>::infinity();
  std::vector<Complex> v(n);
  for (int p = 0; p < probes; ++p) {
    double norm2 = 0.0;
    for (Complex& z : v) {
      z = Complex(normal(rng), normal(rng));
      norm2 += std::norm(z);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& z : v) z *= scale;
    Complex expectation{};
    for (std::size_t r = 0; r < n; ++r) {
      Complex row{};
      for (std::size_t c = 0; c < n; ++c) row += a(r, c) * v[c];
      expectation += std::conj(v[r]) * row;
    }
    worst = std::min(worst, expectation.real());
  }
  return worst;
}

StateVector::StateVector(std::vector<std::size_t> dims,
                         std::vector<Complex> amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  if (dims_.empty() || Product(dims_) != amplitudes_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state dims " + DimsString(dims_) + " do not match " +
                    std::to_string(amplitudes_.size()) + " amplitudes");
  }
  double norm2 = 0.0;
  for (const Complex& z : amplitudes_) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "squared norm " << norm2 << " differs from 1";
    throw Error(ErrorCode::kUnnormalizedState, msg.str());
  }
}

StateVector StateVector::Basis(std::vector<std::size_t> dims,
                               std::size_t index) {
  const std::size_t n = Product(dims);
  if (index >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(index) + " >= " +
                    std::to_string(n));
  }
  std::vector<Complex> amplitudes(n);
  amplitudes[index] = 1.0;
  return StateVector(std::move(dims), std::move(amplitudes));
}

StateVector StateVector::Normalized(std::vector<std::size_t> dims,
                                    std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const Complex& z : amplitudes) norm2 += std::norm(z);
  if (norm2 == 0.0) {
    throw Error(ErrorCode::kUnnormalizedState, "zero vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& z : amplitudes) z *= scale;
  return StateVector(std::move(dims), std::move(amplitudes));
}

ComplexMatrix StateVector::Projector() const {
  const std::size_t n = amplitudes_.size();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
    }
  }
  return out.WithFactorDims(dims_);
}

StateVector SwapFactors(const StateVector& psi) {
  if (psi.dims().size() != 2) {
    throw Error(ErrorCode::kBadFactorIndex,
                "factor swap needs a bipartite state, got dims " +
                    DimsString(psi.dims()));
  }
  const std::size_t d1 = psi.dims()[0];
  const std::size_t d2 = psi.dims()[1];
  std::vector<Complex> swapped(psi.size());
  for (std::size_t j1 = 0; j1 < d1; ++j1) {
    for (std::size_t j2 = 0; j2 < d2; ++j2) {
      swapped[j2 * d1 + j1] = psi[j1 * d2 + j2];
    }
  }
  return StateVector({d2, d1}, std::move(swapped));
}

DensityOperator::DensityOperator(ComplexMatrix matrix)
    : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.factor_dims().empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "density operator needs a square matrix with factor dims");
  }
  if (!IsHermitian(matrix_)) {
    throw Error(ErrorCode::kNotADensityOperator, "not Hermitian");
  }
  const Complex tr = Trace(matrix_);
  if (std::abs(tr - Complex{1.0}) > kTraceTolerance) {
    throw Error(ErrorCode::kNotADensityOperator,
                "trace " + std::to_string(tr.real()) + " differs from 1");
  }
  if (MinProbeExpectation(matrix_, 20, /*seed=*/0x5eed) <
      -kPositivityTolerance) {
    throw Error(ErrorCode::kNotADensityOperator, "not positive");
  }
}

DensityOperator DensityOperator::FromPureState(const StateVector& psi) {
  return DensityOperator(psi.Projector());
}

double TraceProduct(const DensityOperator& rho, const ComplexMatrix& m) {
  const ComplexMatrix& r = rho.matrix();
  if (!m.is_square() || m.rows() != r.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "observable is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", state has dimension " +
                    std::to_string(r.rows()));
  }
  if (m.factor_dims().size() > 1 && m.factor_dims() != r.factor_dims()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "observable factor dims " + DimsString(m.factor_dims()) +
                    " vs state " + DimsString(r.factor_dims()));
  }
  if (!IsHermitian(m)) {
    throw Error(ErrorCode::kNonRealResult, "observable is not Hermitian");
  }
  // tr(rho m) = sum_{i,k} rho_ik m_ki, without forming the product.
  Complex t{};
  const std::size_t n = r.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) t += r(i, k) * m(k, i);
  }
  if (std::abs(t.imag()) > kImaginaryResidue) {
    throw Error(ErrorCode::kNonRealResult,
                "imaginary residue " + std::to_string(t.imag()));
  }
  return t.real();
}

DensityOperator PartialTrace(const DensityOperator& rho, std::size_t keep) {
  const auto& dims = rho.factor_dims();
  if (dims.size() != 2) {
    throw Error(ErrorCode::kBadFactorIndex,
                "partial trace needs exactly two factors, got " +
                    DimsString(dims));
  }
  if (keep > 1) {
    throw Error(ErrorCode::kBadFactorIndex,
                "factor index " + std::to_string(keep) + " not in {0,1}");
  }
  const std::size_t d1 = dims[0];
  const std::size_t d2 = dims[1];
  const ComplexMatrix& m = rho.matrix();
  if (keep == 0) {
    ComplexMatrix out(d1, d1);
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d1; ++b) {
        for (std::size_t k = 0; k < d2; ++k) {
          out(a, b) += m(a * d2 + k, b * d2 + k);
        }
      }
    }
    return DensityOperator(out.WithFactorDims({d1}));
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t a = 0; a < d2; ++a) {
    for (std::size_t b = 0; b < d2; ++b) {
      for (std::size_t k = 0; k < d1; ++k) {
        out(a, b) += m(k * d2 + a, k * d2 + b);
      }
    }
  }
  return DensityOperator(out.WithFactorDims({d2}));
}

}  // namespace qgi
