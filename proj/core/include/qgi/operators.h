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

#ifndef QGI_OPERATORS_H_
#define QGI_OPERATORS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgi/isomorphism.h"
#include "qgi/linalg.h"

namespace qgi {

// A player's finite strategy alphabet: unitaries of one dimension, each with
// a display label.
class OperatorSet {
 public:
  // Throws kDimensionMismatch on mixed dimensions or label count, and
  // kInvalidArgument on a non-unitary member or an empty set.
  OperatorSet(std::string name, std::vector<ComplexMatrix> operators,
              std::vector<std::string> labels);

  const std::string& name() const { return name_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t size() const { return operators_.size(); }
  std::size_t dim() const { return operators_.front().rows(); }

  // The permutation behind each operator when every member is a 0/1
  // permutation matrix.
  std::optional<std::vector<Permutation>> AsPermutations() const;

 private:
  std::string name_;
  std::vector<ComplexMatrix> operators_;
  std::vector<std::string> labels_;
};

// Column i carries its single 1 in row p(i), so A|i> = |p(i)>. Throws
// kNotABijection.
ComplexMatrix PermutationMatrix(const Permutation& p);
// Inverse of PermutationMatrix for 0/1 permutation matrices.
std::optional<Permutation> AsPermutation(const ComplexMatrix& m);

// "A_012" style one-line label.
std::string PermutationLabel(const Permutation& p);

ComplexMatrix PauliX();
ComplexMatrix Projector0();
ComplexMatrix Projector1();

// {1, sigma_x}.
OperatorSet IdentitySigmaOperators();
// {1_3, C, D}: C swaps |0> and |2>, D swaps |0> and |1>.
OperatorSet IqbalOperators();
// {V_0, ..., V_{n-1}} with V_k|i> = |i + k mod n>.
OperatorSet CyclicOperators(std::size_t n);

enum class PermutationOrder {
  // Lexicographic one-line notation: 012, 021, 102, 120, 201, 210.
  kLexicographic,
  // Permutations with 0 before 1 in lexicographic order, each followed by
  // its image under the value swap 0 <-> 1: 012, 102, 021, 120, 201, 210.
  kPaired,
};

std::vector<Permutation> OrderedPermutations(std::size_t n,
                                             PermutationOrder order);
// All n! permutation matrices of C^n.
OperatorSet PermutationOperators(
    std::size_t n, PermutationOrder order = PermutationOrder::kLexicographic);

// Resolves "identity-sigma", "iqbal3", "cyclic", "cyclic:<n>" or "perm" for
// a factor of dimension `dim`. Throws kInvalidArgument or kDimensionMismatch.
OperatorSet ResolveOperatorSet(std::string_view name, std::size_t dim);

}  // namespace qgi

#endif  // QGI_OPERATORS_H_
