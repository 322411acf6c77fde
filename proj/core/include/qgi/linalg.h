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

#ifndef QGI_LINALG_H_
#define QGI_LINALG_H_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qgi {

using Complex = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;
inline constexpr double kImaginaryResidue = 1e-9;

// Dense row-major complex matrix. `factor_dims` records the tensor-factor
// structure of a square operator; it is empty when the structure is not
// tracked, and otherwise its product equals rows() == cols().
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries,
                std::vector<std::size_t> factor_dims = {});

  static ComplexMatrix Identity(std::size_t n);
  // Diagonal matrix over a tensor space with the given factor dimensions.
  static ComplexMatrix Diagonal(std::span<const double> diagonal,
                                std::vector<std::size_t> factor_dims);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<std::size_t>& factor_dims() const { return factor_dims_; }
  const std::vector<Complex>& entries() const { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  // Returns a copy carrying a different factor structure.
  ComplexMatrix WithFactorDims(std::vector<std::size_t> factor_dims) const;

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
  std::vector<std::size_t> factor_dims_;
};

// Kronecker product; factor dims are concatenated.
ComplexMatrix Tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix Tensor(std::initializer_list<ComplexMatrix> factors);
ComplexMatrix Dagger(const ComplexMatrix& a);
Complex Trace(const ComplexMatrix& a);
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);
bool IsHermitian(const ComplexMatrix& a, double tol = kHermitianTolerance);
bool IsUnitary(const ComplexMatrix& a, double tol = kHermitianTolerance);
bool IsDiagonal(const ComplexMatrix& a, double tol = kHermitianTolerance);

// min over `probes` random unit vectors v of Re<v|a|v>. Deterministic in seed.
double MinProbeExpectation(const ComplexMatrix& a, int probes,
                           std::uint64_t seed);

// Normalized pure state on a tensor product of C^{dims[k]}, basis ordered
// lexicographically (the last factor varies fastest).
class StateVector {
 public:
  // Throws kUnnormalizedState when | ||psi||^2 - 1 | > kNormTolerance.
  StateVector(std::vector<std::size_t> dims, std::vector<Complex> amplitudes);

  static StateVector Basis(std::vector<std::size_t> dims, std::size_t index);
  // Rescales arbitrary nonzero amplitudes to unit norm.
  static StateVector Normalized(std::vector<std::size_t> dims,
                                std::vector<Complex> amplitudes);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  std::size_t size() const { return amplitudes_.size(); }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  // |psi><psi| with factor_dims = dims().
  ComplexMatrix Projector() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Complex> amplitudes_;
};

// Exchanges the two tensor factors: amplitude at (j1, j2) moves to (j2, j1).
StateVector SwapFactors(const StateVector& psi);

// Hermitian, unit-trace, positive operator. Positivity is probe-checked with
// random unit vectors rather than by eigendecomposition.
class DensityOperator {
 public:
  // Throws kNotADensityOperator if any invariant fails, and
  // kDimensionMismatch if the matrix is not square or lacks factor dims.
  explicit DensityOperator(ComplexMatrix matrix);

  static DensityOperator FromPureState(const StateVector& psi);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& factor_dims() const {
    return matrix_.factor_dims();
  }
  std::size_t dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

// tr(rho * m). Throws kDimensionMismatch, or kNonRealResult when m is not
// Hermitian or the trace has an imaginary part above kImaginaryResidue.
double TraceProduct(const DensityOperator& rho, const ComplexMatrix& m);

// Reduced operator of a bipartite rho: keep = 0 traces out the second factor,
// keep = 1 traces out the first. Throws kBadFactorIndex otherwise, or when
// rho does not have exactly two factors.
DensityOperator PartialTrace(const DensityOperator& rho, std::size_t keep);

}  // namespace qgi

#endif  // QGI_LINALG_H_
