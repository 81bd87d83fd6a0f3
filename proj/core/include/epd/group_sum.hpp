// Copyright 2026 The epdkit Authors
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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "epd/permutation.hpp"
#include "epd/rational.hpp"
#include "epd/tensor.hpp"

namespace epd {

/// Element of the rational group algebra of S_degree: a finite sum of
/// permutations with exact coefficients. Zero coefficients are never stored.
class FormalGroupSum {
 public:
  using Terms = std::map<Permutation, Rational>;

  explicit FormalGroupSum(std::size_t degree = 0) : degree_(degree) {}
  static FormalGroupSum single(const Permutation& p, Rational coefficient = 1);

  std::size_t degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of `p`, zero if absent.
  Rational coefficient(const Permutation& p) const;

  void add(const Permutation& p, const Rational& coefficient);
  FormalGroupSum& operator+=(const FormalGroupSum& other);
  FormalGroupSum& operator*=(const Rational& scale);

  std::string to_string() const;

  friend bool operator==(const FormalGroupSum&, const FormalGroupSum&) = default;

 private:
  std::size_t degree_ = 0;
  Terms terms_;
};

/// Convolution: (Σ a_π π)(Σ b_ν ν) = Σ a_π b_ν (π∘ν).
FormalGroupSum multiply_sums(const FormalGroupSum& a, const FormalGroupSum& b);
inline FormalGroupSum operator*(const FormalGroupSum& a, const FormalGroupSum& b) { return multiply_sums(a, b); }
FormalGroupSum operator+(FormalGroupSum a, const FormalGroupSum& b);

/// (1/|X|!) Σ_{π∈S_X} s(π) π with s = 1 for sign > 0 and s = sign(π)
/// otherwise. `points` are 0-based and must be distinct and < degree.
FormalGroupSum symmetric_projector(std::size_t degree, std::span<const std::size_t> points, int sign);
/// Full symmetrizer over S_degree.
FormalGroupSum symmetrizer(std::size_t degree);

/// Dense V(π) on `layout`: V|j_1..j_k> = |j_{π⁻¹(1)}..j_{π⁻¹(k)}>.
/// Throws LayoutError when a cycle joins subsystems of different dimension.
ComplexMatrix realize(const Permutation& p, const SubsystemLayout& layout);
ComplexMatrix realize(const FormalGroupSum& sum, const SubsystemLayout& layout);

/// Tr(M·V(π)) without building V(π).
Complex trace_with_permutation(const ComplexMatrix& m, const Permutation& p, const SubsystemLayout& layout);
/// Tr(M·realize(sum)).
Complex trace_with_sum(const ComplexMatrix& m, const FormalGroupSum& sum, const SubsystemLayout& layout);

/// Throws LayoutError unless every cycle of `p` stays within one dimension.
void check_layout_compatible(const Permutation& p, const SubsystemLayout& layout);

}  // namespace epd
