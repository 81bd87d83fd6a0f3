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

#include "epd/group_sum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "epd/errors.hpp"

namespace epd {

FormalGroupSum FormalGroupSum::single(const Permutation& p, Rational coefficient) {
  FormalGroupSum s(p.degree());
  s.add(p, coefficient);
  return s;
}

Rational FormalGroupSum::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FormalGroupSum::add(const Permutation& p, const Rational& coefficient) {
  if (p.degree() != degree_) throw DimensionError("FormalGroupSum: permutation degree mismatch");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalGroupSum& FormalGroupSum::operator+=(const FormalGroupSum& other) {
  if (other.degree_ != degree_) throw DimensionError("FormalGroupSum: degree mismatch");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

FormalGroupSum& FormalGroupSum::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= scale;
  return *this;
}

std::string FormalGroupSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.str() + "*" + p.to_string();
  }
  return s;
}

FormalGroupSum multiply_sums(const FormalGroupSum& a, const FormalGroupSum& b) {
  if (a.degree() != b.degree()) throw DimensionError("multiply_sums: degree mismatch");
  FormalGroupSum out(a.degree());
  for (const auto& [p, cp] : a.terms())
    for (const auto& [q, cq] : b.terms()) out.add(compose(p, q), cp * cq);
  return out;
}

FormalGroupSum operator+(FormalGroupSum a, const FormalGroupSum& b) { return a += b; }

FormalGroupSum symmetric_projector(std::size_t degree, std::span<const std::size_t> points, int sign) {
  if (points.empty()) throw DimensionError("symmetric_projector: empty point set");
  std::set<std::size_t> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw DimensionError("symmetric_projector: repeated point");
  if (*distinct.rbegin() >= degree) throw DimensionError("symmetric_projector: point exceeds degree");

  const Rational weight = Rational(1) / factorial(static_cast<unsigned>(points.size()));
  FormalGroupSum out(degree);
  for (const Permutation& p : permutations_of(degree, points)) {
    const int s = sign >= 0 ? 1 : p.sign();
    out.add(p, s > 0 ? weight : -weight);
  }
  return out;
}

FormalGroupSum symmetrizer(std::size_t degree) {
  std::vector<std::size_t> all(degree);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return symmetric_projector(degree, all, +1);
}

void check_layout_compatible(const Permutation& p, const SubsystemLayout& layout) {
  if (p.degree() != layout.count()) {
    throw LayoutError("permutation of degree " + std::to_string(p.degree()) + " applied to " +
                      std::to_string(layout.count()) + " subsystems");
  }
  for (const auto& cycle : p.cycles(false))
    for (std::size_t v : cycle)
      if (layout.dim(v) != layout.dim(cycle.front())) {
        throw LayoutError("permutation cycle " + p.to_string() + " mixes subsystems of dimension " +
                          std::to_string(layout.dim(cycle.front())) + " and " + std::to_string(layout.dim(v)));
      }
}

namespace {

// Calls fn(col, row) for every basis state `col`, where `row` is its image
// under V(π): row_m = col_{π⁻¹(m)}.
template <typename Fn>
void for_each_image(const Permutation& p, const SubsystemLayout& layout, Fn&& fn) {
  const std::size_t k = layout.count();
  const auto inv = p.inverse();
  std::vector<std::size_t> in(k), out(k);
  for (std::size_t r = 0; r < layout.total(); ++r) {
    layout.digits(r, in);
    for (std::size_t m = 0; m < k; ++m) out[m] = in[inv(m)];
    fn(r, layout.index(out));
  }
}

}  // namespace

ComplexMatrix realize(const Permutation& p, const SubsystemLayout& layout) {
  check_layout_compatible(p, layout);
  ComplexMatrix v(layout.total(), layout.total());
  // Input basis state `col` maps to output `row` with row_m = col_{π⁻¹(m)}.
  for_each_image(p, layout, [&](std::size_t col, std::size_t row) { v(row, col) = 1.0; });
  return v;
}

ComplexMatrix realize(const FormalGroupSum& sum, const SubsystemLayout& layout) {
  ComplexMatrix out(layout.total(), layout.total());
  for (const auto& [p, c] : sum.terms()) {
    check_layout_compatible(p, layout);
    const double w = c.to_double();
    for_each_image(p, layout, [&](std::size_t col, std::size_t row) { out(row, col) += w; });
  }
  return out;
}

Complex trace_with_permutation(const ComplexMatrix& m, const Permutation& p, const SubsystemLayout& layout) {
  check_layout_compatible(p, layout);
  if (m.rows() != layout.total() || m.cols() != layout.total()) {
    throw DimensionError("trace_with_permutation: matrix does not act on the layout");
  }
  // Tr(M V) = Σ_col M[col, row] V[row, col] with row the image of col.
  Complex acc = 0.0;
  for_each_image(p, layout, [&](std::size_t col, std::size_t row) { acc += m(col, row); });
  return acc;
}

Complex trace_with_sum(const ComplexMatrix& m, const FormalGroupSum& sum, const SubsystemLayout& layout) {
  Complex acc = 0.0;
  for (const auto& [p, c] : sum.terms()) acc += c.to_double() * trace_with_permutation(m, p, layout);
  return acc;
}

}  // namespace epd
