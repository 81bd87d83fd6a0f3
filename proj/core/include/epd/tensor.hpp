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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace epd {

using Complex = std::complex<double>;

/// Max-norm tolerance for unitarity and hermiticity checks.
inline constexpr double kUnitarityTol = 1e-10;
/// Default absolute tolerance for scalar comparisons.
inline constexpr double kScalarTol = 1e-10;

/// Dense complex matrix, row-major.
///
/// Carries states (as columns), operators and reshaped tensors. Values are
/// immutable once built except through the explicit element accessors, so a
/// const ComplexMatrix can be shared freely between threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Builds from nested rows; all rows must have equal length.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Column vector.
  static ComplexMatrix column(std::span<const Complex> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<Complex> entries() { return entries_; }
  std::span<const Complex> entries() const { return entries_; }
  Complex* data() { return entries_.data(); }
  const Complex* data() const { return entries_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Ordered local dimensions of a multi-subsystem space.
///
/// Basis index convention: mixed radix with subsystem 0 as the most
/// significant digit, matching the Kronecker product `kron(a, b)` where `a`
/// acts on subsystem 0.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<std::size_t> dims);
  SubsystemLayout(std::initializer_list<std::size_t> dims)
      : SubsystemLayout(std::vector<std::size_t>(dims)) {}

  /// `copies` repetitions of (d1, d2): d1 on even positions, d2 on odd ones.
  static SubsystemLayout alternating(std::size_t d1, std::size_t d2, std::size_t copies);
  static SubsystemLayout uniform(std::size_t d, std::size_t count);

  std::size_t count() const { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// Product of all local dimensions.
  std::size_t total() const { return total_; }
  /// Stride of subsystem `i` in the flat index.
  std::size_t stride(std::size_t i) const { return strides_.at(i); }

  void digits(std::size_t index, std::span<std::size_t> out) const;
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(std::span<const std::size_t> digits) const;

  friend bool operator==(const SubsystemLayout&, const SubsystemLayout&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Normalized pure state on a layout.
class PureState {
 public:
  /// Throws DomainError when the squared norm differs from 1 by more than
  /// `norm_tol`, DimensionError when the amplitude count does not match.
  PureState(SubsystemLayout layout, std::vector<Complex> amplitudes, double norm_tol = 1e-10);

  static PureState basis(SubsystemLayout layout, std::size_t index);
  /// Normalizes an arbitrary nonzero vector.
  static PureState normalized(SubsystemLayout layout, std::vector<Complex> amplitudes);

  const SubsystemLayout& layout() const { return layout_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  /// Applies a unitary acting on the whole layout.
  PureState evolve(const ComplexMatrix& u) const;
  /// |psi><psi|
  ComplexMatrix density() const;

 private:
  SubsystemLayout layout_;
  std::vector<Complex> amplitudes_;
};

/// Tensor product of two states; `a` becomes the leading subsystems.
PureState product_state(const PureState& a, const PureState& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// a ⊗ a ⊗ ... (`copies` factors).
ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t copies);
Complex trace(const ComplexMatrix& m);
/// A·B − B·A
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij − b_ij|; throws DimensionError on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs(const ComplexMatrix& m);
/// ‖U†U − 1‖_max
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kUnitarityTol);
bool is_hermitian(const ComplexMatrix& m, double tol = kUnitarityTol);

/// Reduced operator on the subsystems listed in `keep` (0-based, any order;
/// the result orders them ascending). Throws DimensionError when `m` does
/// not act on `layout` or a kept index is out of range.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep);

/// Left-multiplies `a` (acting on `copies` copies of an n-dim space) by
/// u ⊗ u ⊗ ... without materializing the tensor power. `u` is n×n and
/// `a.rows()` must equal n^copies.
ComplexMatrix apply_tensor_power(const ComplexMatrix& u, const ComplexMatrix& a, std::size_t copies);

/// u^{⊗k} a u^{†⊗k}, evaluated through local applications.
ComplexMatrix conjugate_tensor_power(const ComplexMatrix& u, const ComplexMatrix& a,
                                     std::size_t copies);

std::string to_string(const ComplexMatrix& m, int precision = 6);

}  // namespace epd
