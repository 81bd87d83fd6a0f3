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

#include "epd/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/QR>

#include "epd/errors.hpp"

namespace epd {

namespace {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGolden) ^ (stream * 0xd1b54a32d192ed03ULL + kGolden))) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::uniform() {
  // 53 random bits mapped to (0, 1].
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

Complex CounterRng::complex_gaussian() {
  const double r = std::sqrt(-2.0 * std::log(uniform()));
  const double phi = 2.0 * std::numbers::pi * uniform();
  return {r * std::cos(phi), r * std::sin(phi)};
}

void sample_haar_vector(CounterRng& rng, std::span<Complex> out) {
  double norm = 0.0;
  for (auto& z : out) {
    z = rng.complex_gaussian();
    norm += std::norm(z);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& z : out) z *= scale;
}

PureState sample_haar_state(std::size_t d, CounterRng& rng) {
  if (d == 0) throw DomainError("sample_haar_state: dimension must be positive");
  std::vector<Complex> amps(d);
  sample_haar_vector(rng, amps);
  return PureState::normalized(SubsystemLayout{d}, std::move(amps));
}

ComplexMatrix sample_haar_unitary(std::size_t n, CounterRng& rng) {
  if (n == 0) throw DomainError("sample_haar_unitary: dimension must be positive");
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd g(size, size);
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = 0; c < size; ++c) g(r, c) = rng.complex_gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  ComplexMatrix u(n, n);
  for (Eigen::Index c = 0; c < size; ++c) {
    const Complex diag = rmat(c, c);
    const Complex phase = std::abs(diag) > 0.0 ? diag / std::abs(diag) : Complex(1.0);
    for (Eigen::Index r = 0; r < size; ++r) u(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = q(r, c) * phase;
  }
  return u;
}

ComplexMatrix sample_product_unitary(std::size_t d1, std::size_t d2, CounterRng& rng) {
  const ComplexMatrix a = sample_haar_unitary(d1, rng);
  const ComplexMatrix b = sample_haar_unitary(d2, rng);
  return kron(a, b);
}

}  // namespace epd
