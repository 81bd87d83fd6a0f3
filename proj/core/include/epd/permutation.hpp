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

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epd {

/// Permutation of {0, ..., degree-1}, stored by image: p(i) = image()[i].
///
/// Cycle strings are 1-based, e.g. "(13)(57)" on degree 8. Degrees above 9
/// need separators inside cycles: "(1,10)(2 3)".
class Permutation {
 public:
  using Cycle = std::vector<std::size_t>;

  explicit Permutation(std::size_t degree = 0);  // identity
  explicit Permutation(std::vector<std::size_t> image);  // validates bijectivity

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation transposition(std::size_t degree, std::size_t a, std::size_t b);
  /// 0-based cycles; points not mentioned are fixed. Cycles must be disjoint.
  static Permutation from_cycles(std::size_t degree, std::span<const Cycle> cycles);
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// Canonical disjoint cycles (0-based), each rotated to start at its
  /// smallest point, ordered by that point. Fixed points included.
  std::vector<Cycle> cycles(bool include_fixed = true) const;
  std::size_t cycle_count() const { return cycles(true).size(); }
  int sign() const;
  /// 1-based cycle notation without fixed points; "()" for the identity.
  std::string to_string() const;

  /// Extends to a larger degree, fixing the new points.
  Permutation extended(std::size_t degree) const;
  /// Relabels points through an injective map: result(map[i]) = map[p(i)].
  Permutation embedded(std::size_t degree, std::span<const std::size_t> map) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

 private:
  std::vector<std::size_t> image_;
};

/// (a ∘ b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

/// All degree! permutations, lexicographic by image.
std::vector<Permutation> all_permutations(std::size_t degree);
/// All permutations of `degree` points that move only the listed points.
std::vector<Permutation> permutations_of(std::size_t degree, std::span<const std::size_t> points);

}  // namespace epd
