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

#include <cmath>

#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "epd/monte_carlo.hpp"
#include "epd/random.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

SamplerConfig config(std::uint64_t seed, std::size_t samples, std::size_t threads = 1) {
  SamplerConfig c;
  c.seed = seed;
  c.samples = samples;
  c.threads = threads;
  return c;
}

TEST(CounterRng, DeterministicPerStream) {
  CounterRng a(1, 2), b(1, 2), c(1, 3);
  const auto x = a.next_u64();
  EXPECT_EQ(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
  EXPECT_EQ(a.counter(), 1u);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LE(u, 1.0);
  }
}

TEST(CounterRng, GaussianMoments) {
  CounterRng rng(5, 0);
  double re = 0, im = 0, power = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Complex z = rng.complex_gaussian();
    re += z.real();
    im += z.imag();
    power += std::norm(z);
  }
  EXPECT_NEAR(re / n, 0.0, 0.02);
  EXPECT_NEAR(im / n, 0.0, 0.02);
  EXPECT_NEAR(power / n, 2.0, 0.03);
}

TEST(HaarSampling, UnitVectorsAndUnitaries) {
  CounterRng rng(6, 0);
  const auto s = sample_haar_state(5, rng);
  double norm = 0;
  for (const Complex& z : s.amplitudes()) norm += std::norm(z);
  EXPECT_NEAR(norm, 1.0, 1e-12);
  EXPECT_TRUE(is_unitary(sample_haar_unitary(6, rng)));
  EXPECT_TRUE(is_unitary(sample_product_unitary(2, 3, rng)));
  EXPECT_THROW(sample_haar_state(0, rng), DomainError);
}

TEST(HaarSampling, SecondMomentOfStates) {
  // E|<0|ψ>|⁴ = 2/(d(d+1)).
  CounterRng rng(7, 0);
  const std::size_t d = 3, n = 50000;
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += std::pow(std::norm(sample_haar_state(d, rng).amplitudes()[0]), 2);
  EXPECT_NEAR(acc / n, 2.0 / (d * (d + 1)), 0.005);
}

TEST(MonteCarlo, Deterministic) {
  const auto u = build(make_spec(GateFamily::cnot));
  const auto a = estimate_ep_epd(u, config(42, 5000));
  const auto b = estimate_ep_epd(u, config(42, 5000));
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std, b.std);
  const auto c = estimate_ep_epd(u, config(43, 5000));
  EXPECT_NE(a.mean, c.mean);
}

TEST(MonteCarlo, ThreadCountDoesNotChangeTheEstimate) {
  const auto u = build(make_spec(GateFamily::swap_alpha));
  const auto one = estimate_ep_epd(u, config(9, 5000, 1));
  const auto four = estimate_ep_epd(u, config(9, 5000, 4));
  EXPECT_EQ(one.mean, four.mean);
  EXPECT_EQ(one.std, four.std);
}

TEST(MonteCarlo, SwapGivesExactZero) {
  const auto e = estimate_ep_epd(build(make_spec(GateFamily::swap)), config(1, 3000));
  EXPECT_EQ(e.mean, 0.0);
  EXPECT_EQ(e.std, 0.0);
  EXPECT_EQ(e.n, 3000u);
}

TEST(MonteCarlo, CnotWithinThreeStandardErrors) {
  const auto e = estimate_ep_epd(build(make_spec(GateFamily::cnot)), config(20240611, 100000));
  EXPECT_LE(std::abs(e.mean - 2.0 / 9.0), 3 * e.se_mean);
  EXPECT_LE(std::abs(e.std - 2.0 * std::sqrt(11.0) / 45.0), 3 * e.se_std);
  const auto r = to_result(e);
  EXPECT_EQ(r.method, Method::monte_carlo);
  EXPECT_EQ(r.se_ep, e.se_mean);
}

TEST(MonteCarlo, RectangularDimensions) {
  CounterRng rng(3, 0);
  const auto u = sample_haar_unitary(6, rng);
  SamplerConfig c = config(11, 40000);
  c.d1 = 2;
  c.d2 = 3;
  const auto e = estimate_ep_epd(u, c);
  EXPECT_LE(std::abs(e.mean - ep_exact(u, 2, 3)), 4 * e.se_mean);
}

TEST(MonteCarlo, StandardErrorShrinksWithSamples) {
  const auto u = build(make_spec(GateFamily::cnot));
  const auto small = estimate_ep_epd(u, config(2, 4000));
  const auto large = estimate_ep_epd(u, config(2, 64000));
  EXPECT_NEAR(small.se_mean / large.se_mean, 4.0, 0.4);
  EXPECT_NEAR(large.se_std, large.std / std::sqrt(2.0 * (64000 - 1)), 1e-15);
}

TEST(MonteCarlo, Validation) {
  const auto u = build(make_spec(GateFamily::cnot));
  EXPECT_THROW(estimate_ep_epd(u, config(1, 1)), DomainError);
  EXPECT_THROW(estimate_ep_epd(2.0 * u, config(1, 100)), DomainError);
}

}  // namespace
}  // namespace epd
