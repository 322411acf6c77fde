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

#include "qgi/operators.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "qgi/errors.h"

namespace qgi {

OperatorSet::OperatorSet(std::string name, std::vector<ComplexMatrix> operators,
                         std::vector<std::string> labels)
    : name_(std::move(name)),
      operators_(std::move(operators)),
      labels_(std::move(labels)) {
  if (operators_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "operator set '" + name_ + "' is empty");
  }
  if (labels_.size() != operators_.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator set '" + name_ + "' has " +
                    std::to_string(operators_.size()) + " operators but " +
                    std::to_string(labels_.size()) + " labels");
  }
  const std::size_t d = operators_.front().rows();
  for (std::size_t k = 0; k < operators_.size(); ++k) {
    const ComplexMatrix& u = operators_[k];
    if (u.rows() != d || u.cols() != d) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "operator '" + labels_[k] + "' in set '" + name_ +
                      "' is not " + std::to_string(d) + "x" +
                      std::to_string(d));
    }
    if (!IsUnitary(u)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "operator '" + labels_[k] + "' is not unitary");
    }
    operators_[k] = u.WithFactorDims({d});
  }
}

std::optional<std::vector<Permutation>> OperatorSet::AsPermutations() const {
  std::vector<Permutation> perms;
  for (const auto& u : operators_) {
    auto p = AsPermutation(u);
    if (!p) return std::nullopt;
    perms.push_back(std::move(*p));
  }
  return perms;
}

ComplexMatrix PermutationMatrix(const Permutation& p) {
  if (!IsPermutation(p)) {
    throw Error(ErrorCode::kNotABijection, "not a permutation of {0.." +
                                               std::to_string(p.size()) +
                                               "-1}");
  }
  const std::size_t n = p.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(p[i], i) = 1.0;
  return m.WithFactorDims({n});
}

std::optional<Permutation> AsPermutation(const ComplexMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Permutation p(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      const Complex z = m(r, c);
      if (std::abs(z - Complex{1.0}) <= kHermitianTolerance) {
        if (p[c] != n) return std::nullopt;
        p[c] = r;
      } else if (std::abs(z) > kHermitianTolerance) {
        return std::nullopt;
      }
    }
    if (p[c] == n) return std::nullopt;
  }
  if (!IsPermutation(p)) return std::nullopt;
  return p;
}

std::string PermutationLabel(const Permutation& p) {
  std::string label = "A_";
  const bool separate = p.size() > 10;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (separate && i > 0) label += '.';
    label += std::to_string(p[i]);
  }
  return label;
}

ComplexMatrix PauliX() { return PermutationMatrix({1, 0}); }

ComplexMatrix Projector0() { return StateVector::Basis({2}, 0).Projector(); }

ComplexMatrix Projector1() { return StateVector::Basis({2}, 1).Projector(); }

OperatorSet IdentitySigmaOperators() {
  return OperatorSet("identity-sigma", {ComplexMatrix::Identity(2), PauliX()},
                     {"1", "sx"});
}

OperatorSet IqbalOperators() {
  return OperatorSet("iqbal3",
                     {ComplexMatrix::Identity(3), PermutationMatrix({2, 1, 0}),
                      PermutationMatrix({1, 0, 2})},
                     {"1_3", "C", "D"});
}

OperatorSet CyclicOperators(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cyclic set needs n >= 1");
  }
  std::vector<ComplexMatrix> ops;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k) {
    Permutation shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = (i + k) % n;
    ops.push_back(PermutationMatrix(shift));
    labels.push_back(k == 0 ? "1_" + std::to_string(n)
                            : "V" + std::to_string(k));
  }
  return OperatorSet("cyclic:" + std::to_string(n), std::move(ops),
                     std::move(labels));
}

std::vector<Permutation> OrderedPermutations(std::size_t n,
                                             PermutationOrder order) {
  std::vector<Permutation> lex = AllPermutations(n);
  if (order == PermutationOrder::kLexicographic || n < 2) return lex;
  std::vector<Permutation> paired;
  paired.reserve(lex.size());
  const Permutation swap01 = [n] {
    Permutation s = IdentityPermutation(n);
    std::swap(s[0], s[1]);
    return s;
  }();
  for (const Permutation& p : lex) {
    const auto zero = std::find(p.begin(), p.end(), 0);
    const auto one = std::find(p.begin(), p.end(), 1);
    if (zero > one) continue;
    paired.push_back(p);
    paired.push_back(Compose(swap01, p));
  }
  return paired;
}

OperatorSet PermutationOperators(std::size_t n, PermutationOrder order) {
  std::vector<ComplexMatrix> ops;
  std::vector<std::string> labels;
  for (const Permutation& p : OrderedPermutations(n, order)) {
    ops.push_back(PermutationMatrix(p));
    labels.push_back(PermutationLabel(p));
  }
  return OperatorSet("perm", std::move(ops), std::move(labels));
}

OperatorSet ResolveOperatorSet(std::string_view name, std::size_t dim) {
  auto require_dim = [&](std::size_t expected) {
    if (dim != expected) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "operator set '" + std::string(name) + "' acts on C^" +
                      std::to_string(expected) + " but the game needs C^" +
                      std::to_string(dim));
    }
  };
  if (name == "identity-sigma") {
    require_dim(2);
    return IdentitySigmaOperators();
  }
  if (name == "iqbal3") {
    require_dim(3);
    return IqbalOperators();
  }
  if (name == "cyclic") return CyclicOperators(dim);
  if (name.starts_with("cyclic:")) {
    const std::string_view digits = name.substr(7);
    std::size_t n = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad operator set '" + std::string(name) + "'");
    }
    require_dim(n);
    return CyclicOperators(n);
  }
  if (name == "perm") return PermutationOperators(dim);
  throw Error(ErrorCode::kInvalidArgument,
              "unknown operator set '" + std::string(name) +
                  "' (expected identity-sigma, iqbal3, cyclic[:n] or perm)");
}

}  // namespace qgi
