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

// Scalar-generic dense tensor kernels shared by the double and quad
// precision contraction paths.

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "epd/errors.hpp"
#include "epd/network.hpp"
#include "epd/tensor.hpp"
#include "linalg_map.hpp"

namespace epd::detail {

__extension__ typedef __float128 Quad;
using QuadComplex = std::complex<Quad>;

template <typename T>
struct DenseTensor {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  std::vector<T> data;

  std::size_t rank() const { return labels.size(); }
};

template <typename T>
void scalar_gemm(const T* a, const T* b, T* c, std::size_t m, std::size_t k, std::size_t n) {
  if constexpr (std::is_same_v<T, Complex>) {
    gemm(a, b, c, m, k, n);
  } else {
    std::fill(c, c + m * n, T{});
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t p = 0; p < k; ++p) {
        const T av = a[i * k + p];
        const T* brow = b + p * n;
        T* crow = c + i * n;
        for (std::size_t j = 0; j < n; ++j) crow[j] += av * brow[j];
      }
  }
}

template <typename T>
DenseTensor<T> permute(const DenseTensor<T>& t, std::span<const std::size_t> order) {
  const std::size_t r = t.rank();
  if (order.size() != r) throw NetworkError("Tensor::permuted: order has wrong length");
  bool identity = true;
  for (std::size_t i = 0; i < r; ++i) identity = identity && order[i] == i;
  if (identity) return t;

  std::vector<std::size_t> old_strides(r);
  std::size_t s = 1;
  for (std::size_t i = r; i-- > 0;) {
    old_strides[i] = s;
    s *= t.dims[i];
  }
  DenseTensor<T> out;
  out.labels.resize(r);
  out.dims.resize(r);
  std::vector<std::size_t> strides(r);
  for (std::size_t i = 0; i < r; ++i) {
    out.labels[i] = t.labels[order[i]];
    out.dims[i] = t.dims[order[i]];
    strides[i] = old_strides[order[i]];
  }
  out.data.resize(t.data.size());
  if (out.data.empty()) return out;

  // Odometer over the new index with the matching old offset kept in step.
  std::vector<std::size_t> counter(r, 0);
  std::size_t offset = 0;
  const std::size_t last = r - 1;
  const std::size_t inner_dim = out.dims[last];
  const std::size_t inner_stride = strides[last];
  for (std::size_t pos = 0; pos < out.data.size();) {
    std::size_t o = offset;
    for (std::size_t k = 0; k < inner_dim; ++k, o += inner_stride) out.data[pos++] = t.data[o];
    if (r == 1) break;
    for (std::size_t ax = last; ax-- > 0;) {
      if (++counter[ax] < out.dims[ax]) {
        offset += strides[ax];
        break;
      }
      offset -= strides[ax] * (out.dims[ax] - 1);
      counter[ax] = 0;
    }
  }
  return out;
}

template <typename T>
DenseTensor<T> self_trace(const DenseTensor<T>& t) {
  std::map<int, std::vector<std::size_t>> axes_of;
  for (std::size_t i = 0; i < t.rank(); ++i) axes_of[t.labels[i]].push_back(i);
  std::vector<std::size_t> keep, paired;
  for (std::size_t i = 0; i < t.rank(); ++i) {
    const auto& axes = axes_of[t.labels[i]];
    if (axes.size() == 1) {
      keep.push_back(i);
    } else if (axes.size() == 2) {
      if (axes[0] == i) {
        if (t.dims[axes[0]] != t.dims[axes[1]]) {
          throw NetworkError("label " + std::to_string(t.labels[i]) + " pairs legs of unequal dimension");
        }
        paired.push_back(axes[0]);
        paired.push_back(axes[1]);
      }
    } else {
      throw NetworkError("label " + std::to_string(t.labels[i]) + " appears more than twice on one tensor");
    }
  }
  if (paired.empty()) return t;

  // Kept axes first, then the traced axes as consecutive pairs.
  std::vector<std::size_t> order = keep;
  order.insert(order.end(), paired.begin(), paired.end());
  const DenseTensor<T> p = permute(t, order);
  DenseTensor<T> out;
  std::size_t kept_size = 1;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.labels.push_back(p.labels[i]);
    out.dims.push_back(p.dims[i]);
    kept_size *= p.dims[i];
  }
  const std::size_t block = p.data.size() / kept_size;
  std::vector<std::size_t> diag{0};
  std::size_t stride = block;
  for (std::size_t k = keep.size(); k < p.rank(); k += 2) {
    const std::size_t d = p.dims[k];
    stride /= d * d;
    std::vector<std::size_t> next;
    next.reserve(diag.size() * d);
    for (std::size_t base : diag)
      for (std::size_t v = 0; v < d; ++v) next.push_back(base + v * (d + 1) * stride);
    diag = std::move(next);
  }
  out.data.resize(kept_size);
  for (std::size_t i = 0; i < kept_size; ++i) {
    T acc{};
    const T* row = p.data.data() + i * block;
    for (std::size_t off : diag) acc += row[off];
    out.data[i] = acc;
  }
  return out;
}

template <typename T>
DenseTensor<T> contract_two(const DenseTensor<T>& a, const DenseTensor<T>& b) {
  std::vector<std::size_t> a_free, a_shared, b_free, b_shared;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    auto it = std::find(b.labels.begin(), b.labels.end(), a.labels[i]);
    if (it == b.labels.end()) {
      a_free.push_back(i);
    } else {
      const auto j = static_cast<std::size_t>(it - b.labels.begin());
      if (a.dims[i] != b.dims[j]) {
        throw NetworkError("label " + std::to_string(a.labels[i]) + " pairs legs of unequal dimension");
      }
      a_shared.push_back(i);
      b_shared.push_back(j);
    }
  }
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (std::find(b_shared.begin(), b_shared.end(), j) == b_shared.end()) b_free.push_back(j);

  std::vector<std::size_t> a_order = a_free;
  a_order.insert(a_order.end(), a_shared.begin(), a_shared.end());
  std::vector<std::size_t> b_order = b_shared;
  b_order.insert(b_order.end(), b_free.begin(), b_free.end());
  const DenseTensor<T> ap = permute(a, a_order);
  const DenseTensor<T> bp = permute(b, b_order);

  std::size_t m = 1, k = 1, n = 1;
  DenseTensor<T> out;
  for (std::size_t i : a_free) {
    m *= a.dims[i];
    out.labels.push_back(a.labels[i]);
    out.dims.push_back(a.dims[i]);
  }
  for (std::size_t i : a_shared) k *= a.dims[i];
  for (std::size_t j : b_free) {
    n *= b.dims[j];
    out.labels.push_back(b.labels[j]);
    out.dims.push_back(b.dims[j]);
  }
  out.data.resize(m * n);
  if (!out.data.empty()) scalar_gemm(ap.data.data(), bp.data.data(), out.data.data(), m, k, n);
  return out;
}

template <typename T>
void validate_closed(std::span<const DenseTensor<T>> tensors) {
  std::map<int, std::vector<std::size_t>> dims_of;
  for (const auto& t : tensors)
    for (std::size_t i = 0; i < t.rank(); ++i) dims_of[t.labels[i]].push_back(t.dims[i]);
  for (const auto& [label, dims] : dims_of) {
    if (dims.size() != 2) {
      throw NetworkError("label " + std::to_string(label) + " appears " + std::to_string(dims.size()) +
                         " time(s); a closed network needs exactly 2");
    }
    if (dims[0] != dims[1]) {
      throw NetworkError("label " + std::to_string(label) + " joins legs of dimension " + std::to_string(dims[0]) +
                         " and " + std::to_string(dims[1]));
    }
  }
}

template <typename T>
std::size_t merged_size(const DenseTensor<T>& a, const DenseTensor<T>& b, bool& shares) {
  std::size_t size = 1;
  shares = false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[i]) == b.labels.end()) {
      size *= a.dims[i];
    } else {
      shares = true;
    }
  }
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end()) size *= b.dims[j];
  return size;
}

/// Greedy full contraction: connected pairs before outer products, then the
/// smallest intermediate, ties by position.
template <typename T>
T contract_closed(std::vector<DenseTensor<T>> pool) {
  validate_closed(std::span<const DenseTensor<T>>(pool));
  for (auto& t : pool) t = self_trace(t);

  T scalar{1};
  while (!pool.empty()) {
    for (std::size_t i = pool.size(); i-- > 0;) {
      if (pool[i].rank() == 0) {
        scalar *= pool[i].data[0];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    if (pool.empty()) break;

    std::size_t best_i = 0, best_j = 0;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    bool best_connected = false;
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        bool shares = false;
        const std::size_t s = merged_size(pool[i], pool[j], shares);
        if ((shares && !best_connected) || (shares == best_connected && s < best_size)) {
          best_i = i;
          best_j = j;
          best_size = s;
          best_connected = shares;
        }
      }
    DenseTensor<T> merged = self_trace(contract_two(pool[best_i], pool[best_j]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_j));
    pool[best_i] = std::move(merged);
  }
  return scalar;
}

/// Full contraction kept in extended precision, for callers that combine
/// many traces before rounding.
QuadComplex contract_network_quad(std::span<const NetworkNode> nodes);

}  // namespace epd::detail
