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

#include <cstdint>
#include <span>

#include "epd/tensor.hpp"

namespace epd {

/// Counter-based generator: the k-th output of stream s under seed x is a
/// fixed hash of (x, s, k). Streams never share state, so any partition of
/// work over streams gives the same numbers.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform on (0, 1].
  double uniform();
  /// Standard complex normal (unit variance per component) via Box–Muller.
  Complex complex_gaussian();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Fills `out` with a Haar-random unit vector (normalized complex Gaussian).
void sample_haar_vector(CounterRng& rng, std::span<Complex> out);
/// Haar-random pure state on C^d; throws DomainError for d = 0.
PureState sample_haar_state(std::size_t d, CounterRng& rng);
/// Haar-random n×n unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix sample_haar_unitary(std::size_t n, CounterRng& rng);
/// a ⊗ b with independent Haar-random a (d1×d1) and b (d2×d2).
ComplexMatrix sample_product_unitary(std::size_t d1, std::size_t d2, CounterRng& rng);

}  // namespace epd
