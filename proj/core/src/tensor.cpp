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

#include "epd/tensor.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "epd/errors.hpp"
#include "linalg_map.hpp"

namespace epd {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: " + std::to_string(entries_.size()) +
                         " entries for a " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " matrix");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return {r, c, std::move(entries)};
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
  return {values.size(), 1, std::vector<Complex>(values.begin(), values.end())};
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  if (out.size() == 0) return out;
  detail::gemm(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.cols());
  return out;
}

// ---------------------------------------------------------------------------

SubsystemLayout::SubsystemLayout(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  strides_.resize(dims_.size());
  total_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] == 0) throw DimensionError("SubsystemLayout: local dimension 0");
    strides_[i] = total_;
    total_ *= dims_[i];
  }
}

SubsystemLayout SubsystemLayout::alternating(std::size_t d1, std::size_t d2, std::size_t copies) {
  std::vector<std::size_t> dims;
  dims.reserve(2 * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    dims.push_back(d1);
    dims.push_back(d2);
  }
  return SubsystemLayout(std::move(dims));
}

SubsystemLayout SubsystemLayout::uniform(std::size_t d, std::size_t count) {
  return SubsystemLayout(std::vector<std::size_t>(count, d));
}

void SubsystemLayout::digits(std::size_t index, std::span<std::size_t> out) const {
  for (std::size_t i = dims_.size(); i-- > 0;) {
    out[i] = index % dims_[i];
    index /= dims_[i];
  }
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t index) const {
  std::vector<std::size_t> out(dims_.size());
  digits(index, out);
  return out;
}

std::size_t SubsystemLayout::index(std::span<const std::size_t> digits) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) idx += digits[i] * strides_[i];
  return idx;
}

// ---------------------------------------------------------------------------

namespace {

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

}  // namespace

PureState::PureState(SubsystemLayout layout, std::vector<Complex> amplitudes, double norm_tol)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total()) {
    throw DimensionError("PureState: " + std::to_string(amplitudes_.size()) +
                         " amplitudes for a layout of dimension " + std::to_string(layout_.total()));
  }
  const double n2 = squared_norm(amplitudes_);
  if (std::abs(n2 - 1.0) > norm_tol) {
    throw DomainError("PureState: squared norm " + std::to_string(n2) + " is not 1");
  }
}

PureState PureState::basis(SubsystemLayout layout, std::size_t index) {
  std::vector<Complex> amps(layout.total());
  amps.at(index) = 1.0;
  return {std::move(layout), std::move(amps)};
}

PureState PureState::normalized(SubsystemLayout layout, std::vector<Complex> amplitudes) {
  const double n = std::sqrt(squared_norm(amplitudes));
  if (n == 0.0) throw DomainError("PureState::normalized: zero vector");
  for (auto& a : amplitudes) a /= n;
  return {std::move(layout), std::move(amplitudes)};
}

PureState PureState::evolve(const ComplexMatrix& u) const {
  if (u.rows() != layout_.total() || u.cols() != layout_.total()) {
    throw DimensionError("PureState::evolve: operator does not act on the state's layout");
  }
  std::vector<Complex> out(layout_.total());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < u.cols(); ++c) acc += u(r, c) * amplitudes_[c];
    out[r] = acc;
  }
  return {layout_, std::move(out), 1e-8};
}

ComplexMatrix PureState::density() const {
  const std::size_t n = amplitudes_.size();
  ComplexMatrix rho(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) rho(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
  return rho;
}

PureState product_state(const PureState& a, const PureState& b) {
  std::vector<std::size_t> dims = a.layout().dims();
  dims.insert(dims.end(), b.layout().dims().begin(), b.layout().dims().end());
  std::vector<Complex> amps;
  amps.reserve(a.amplitudes().size() * b.amplitudes().size());
  for (const auto& x : a.amplitudes())
    for (const auto& y : b.amplitudes()) amps.push_back(x * y);
  return {SubsystemLayout(std::move(dims)), std::move(amps), 1e-8};
}

// ---------------------------------------------------------------------------

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex s = a(ar, ac);
      if (s == Complex{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& a, std::size_t copies) {
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t i = 0; i < copies; ++i) out = kron(out, a);
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("trace: matrix is not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double max_abs(const ComplexMatrix& m) {
  double out = 0.0;
  for (const auto& e : m.entries()) out = std::max(out, std::abs(e));
  return out;
}

double unitarity_defect(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("unitarity_defect: matrix is not square");
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) { return u.is_square() && unitarity_defect(u) <= tol; }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && max_abs_diff(m, m.adjoint()) <= tol;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                            std::span<const std::size_t> keep) {
  if (!m.is_square() || m.rows() != layout.total()) {
    throw DimensionError("partial_trace: operator dimension " + std::to_string(m.rows()) +
                         " does not match layout dimension " + std::to_string(layout.total()));
  }
  std::vector<bool> kept(layout.count(), false);
  for (std::size_t k : keep) {
    if (k >= layout.count()) {
      throw DimensionError("partial_trace: subsystem " + std::to_string(k) + " out of range");
    }
    kept[k] = true;
  }
  std::vector<std::size_t> kept_dims, traced_dims, kept_pos, traced_pos;
  for (std::size_t i = 0; i < layout.count(); ++i) {
    if (kept[i]) {
      kept_pos.push_back(i);
      kept_dims.push_back(layout.dim(i));
    } else {
      traced_pos.push_back(i);
      traced_dims.push_back(layout.dim(i));
    }
  }
  const SubsystemLayout kept_layout(kept_dims);
  const SubsystemLayout traced_layout(traced_dims);

  // Offset of every kept / traced multi-index inside the full flat index.
  auto offsets = [&](const SubsystemLayout& sub, const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> out(sub.total());
    std::vector<std::size_t> dig(sub.count());
    for (std::size_t i = 0; i < sub.total(); ++i) {
      sub.digits(i, dig);
      std::size_t off = 0;
      for (std::size_t j = 0; j < pos.size(); ++j) off += dig[j] * layout.stride(pos[j]);
      out[i] = off;
    }
    return out;
  };
  const auto kept_off = offsets(kept_layout, kept_pos);
  const auto traced_off = offsets(traced_layout, traced_pos);

  ComplexMatrix out(kept_layout.total(), kept_layout.total());
  for (std::size_t r = 0; r < kept_off.size(); ++r)
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex acc = 0.0;
      for (std::size_t t : traced_off) acc += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix apply_tensor_power(const ComplexMatrix& u, const ComplexMatrix& a, std::size_t copies) {
  if (!u.is_square()) throw DimensionError("apply_tensor_power: factor is not square");
  const std::size_t n = u.rows();
  std::size_t total = 1;
  for (std::size_t i = 0; i < copies; ++i) total *= n;
  if (a.rows() != total) {
    throw DimensionError("apply_tensor_power: operand has " + std::to_string(a.rows()) +
                         " rows, expected " + std::to_string(total));
  }
  // Copy c acts on row digit c. Rows sharing the leading digits [0, c) form a
  // contiguous n × (inner · cols) block, so each copy is a batch of GEMMs.
  ComplexMatrix cur = a;
  ComplexMatrix next(a.rows(), a.cols());
  std::size_t outer = 1;
  std::size_t inner = total / n;
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t width = inner * a.cols();
    for (std::size_t o = 0; o < outer; ++o) {
      const std::size_t base = o * n * width;
      detail::gemm(u.data(), cur.data() + base, next.data() + base, n, n, width);
    }
    std::swap(cur, next);
    outer *= n;
    inner /= n;
  }
  return cur;
}

ComplexMatrix conjugate_tensor_power(const ComplexMatrix& u, const ComplexMatrix& a,
                                     std::size_t copies) {
  // u^k a u^{†k} = (u^k (u^k a)^†)^†
  const ComplexMatrix left = apply_tensor_power(u, a, copies);
  return apply_tensor_power(u, left.adjoint(), copies).adjoint();
}

std::string to_string(const ComplexMatrix& m, int precision) {
  std::ostringstream os;
  os.precision(precision);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Complex v = m(r, c);
      os << (c ? ", " : "") << v.real();
      if (v.imag() != 0.0) os << (v.imag() < 0 ? "-" : "+") << std::abs(v.imag()) << "i";
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace epd
