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


// Helpers shared by the unit tests.

#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "epd/tensor.hpp"

namespace epd::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = {normal(gen), normal(gen)};
  return m;
}

inline ComplexMatrix random_square(std::size_t n, std::mt19937_64& gen) { return random_matrix(n, n, gen); }

/// Random density matrix (positive, unit trace).
inline ComplexMatrix random_density(std::size_t n, std::mt19937_64& gen) {
  const ComplexMatrix g = random_square(n, gen);
  ComplexMatrix rho = g * g.adjoint();
  return rho * (1.0 / trace(rho).real());
}

inline ComplexMatrix pauli_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

inline ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

#define EXPECT_MATRIX_NEAR(a, b, tol) EXPECT_LE(::epd::max_abs_diff((a), (b)), (tol))
#define EXPECT_COMPLEX_NEAR(a, b, tol) EXPECT_LE(std::abs(::epd::Complex(a) - ::epd::Complex(b)), (tol))

}  // namespace epd::testing
