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


#include <gtest/gtest.h>

#include "epd/errors.hpp"
#include "epd/haar_moments.hpp"
#include "epd/random.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

TEST(MomentConstants, SmallDimensions) {
  EXPECT_EQ(moment_constants(1).second, Rational(1, 2));
  EXPECT_EQ(moment_constants(1).fourth, Rational(1, 24));
  EXPECT_EQ(moment_constants(2).second, Rational(1, 6));
  EXPECT_EQ(moment_constants(2).fourth, Rational(1, 120));
  EXPECT_EQ(moment_constants(3).second, Rational(1, 12));
  EXPECT_EQ(moment_constants(3).fourth, Rational(1, 360));
  EXPECT_THROW(moment_constants(0), DomainError);
}

TEST(PureStateAverage, Normalizations) {
  EXPECT_EQ(pure_state_haar_average(2, 2).normalization, Rational(1, 3));
  EXPECT_EQ(pure_state_haar_average(2, 4).normalization, Rational(1, 5));
  EXPECT_EQ(pure_state_haar_average(3, 2).normalization, Rational(1, 6));
  EXPECT_THROW(pure_state_haar_average(0, 2), DomainError);
  EXPECT_THROW(pure_state_haar_average(2, 0), DomainError);
}

TEST(PureStateAverage, UnitTraceAndProjector) {
  for (std::size_t d : {2, 3})
    for (std::size_t k : {1, 2, 3}) {
      const auto m = pure_state_haar_average(d, k).realize(d);
      EXPECT_NEAR(trace(m).real(), 1.0, 1e-12);
      // normalization⁻¹ · m is the symmetric projector.
      const double scale = 1.0 / pure_state_haar_average(d, k).normalization.to_double();
      EXPECT_MATRIX_NEAR(scale * m * (scale * m), scale * m, 1e-10);
    }
}

TEST(Omega, UnitTraceAndHermitian) {
  for (std::size_t order : {2, 4}) {
    const auto w = omega(order, 2, 2 + (order == 2));
    const auto m = w.realize();
    EXPECT_NEAR(trace(m).real(), 1.0, 1e-12) << "order " << order;
    EXPECT_MATRIX_NEAR(m, m.adjoint(), 1e-14);
  }
}

TEST(Omega, TrivialDimensionIsScalarOne) {
  const auto w = omega(4, 1, 1);
  const auto m = w.realize();
  ASSERT_EQ(m.rows(), 1u);
  EXPECT_COMPLEX_NEAR(m(0, 0), 1.0, 1e-12);
}

TEST(Omega, Validation) {
  EXPECT_THROW(omega(3, 2, 2), DomainError);
  EXPECT_THROW(omega(2, 0, 2), DomainError);
  EXPECT_EQ(omega(2, 2, 3).sum.size(), 4u);
  EXPECT_EQ(omega(4, 2, 2).sum.size(), 576u);
}

TEST(Omega, CommutesWithLocalUnitaries) {
  CounterRng rng(7, 0);
  const auto m = omega(2, 2, 3).realize();
  for (int i = 0; i < 3; ++i) {
    const auto local = kron_power(sample_product_unitary(2, 3, rng), 2);
    EXPECT_MATRIX_NEAR(local * m, m * local, 1e-12);
  }
}

TEST(Omega, MatchesSampledProductMoment) {
  // Second moment average estimated with 20000 random product states.
  const std::size_t d1 = 2, d2 = 2, samples = 20000;
  CounterRng rng(11, 0);
  ComplexMatrix acc = ComplexMatrix::zeros(16, 16);
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = sample_haar_state(d1, rng), b = sample_haar_state(d2, rng);
    const auto rho = product_state(a, b).density();
    acc += kron(rho, rho);
  }
  acc *= Complex(1.0 / samples);
  EXPECT_MATRIX_NEAR(acc, omega(2, d1, d2).realize(), 0.01);
}

TEST(HaarStates, FirstMomentIsMaximallyMixed) {
  CounterRng rng(12, 0);
  const std::size_t d = 3, samples = 20000;
  ComplexMatrix acc = ComplexMatrix::zeros(d, d);
  for (std::size_t s = 0; s < samples; ++s) acc += sample_haar_state(d, rng).density();
  acc *= Complex(1.0 / samples);
  EXPECT_MATRIX_NEAR(acc, (1.0 / d) * ComplexMatrix::identity(d), 0.01);
}

}  // namespace
}  // namespace epd
