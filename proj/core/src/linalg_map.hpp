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

// Private bridge to Eigen. Nothing outside core/src includes this.

#include <Eigen/Dense>

#include <complex>
#include <cstddef>

namespace epd::detail {

using RowMajorMap =
    Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using ConstRowMajorMap = Eigen::Map<
    const Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

/// c (m×n) = a (m×k) · b (k×n), all row-major and non-aliasing.
inline void gemm(const std::complex<double>* a, const std::complex<double>* b,
                 std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n) {
  ConstRowMajorMap am(a, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k));
  ConstRowMajorMap bm(b, static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n));
  RowMajorMap cm(c, static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
  cm.noalias() = am * bm;
}

}  // namespace epd::detail
