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

#include <cstddef>
#include <cstdint>

#include "epd/engine.hpp"
#include "epd/tensor.hpp"

namespace epd {

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 100000;
  std::size_t d1 = 2;
  std::size_t d2 = 2;
  /// Worker threads; 0 picks the hardware concurrency. Never changes results.
  std::size_t threads = 0;
};

/// Sample mean and unbiased standard deviation of the output linear entropy.
/// se_std uses the normal approximation std/√(2(n−1)).
struct McEstimate {
  double mean = 0.0;
  double std = 0.0;
  double se_mean = 0.0;
  double se_std = 0.0;
  std::size_t n = 0;
};

/// Samples are drawn in blocks of this size; per-block moments are merged
/// in a fixed binary tree.
inline constexpr std::size_t kSampleBlock = 1024;

/// Entropies within this distance of zero are reported as exactly zero;
/// the true value is non-negative and round-off is ~1e-16.
inline constexpr double kEntropyFloor = 1e-14;

/// Estimates EP/EPD from random product inputs U(|a>⊗|b>). Sample i uses
/// CounterRng(seed, i), so the estimate is a pure function of (u, cfg).
/// Throws DomainError for samples < 2 or a non-unitary u.
McEstimate estimate_ep_epd(const ComplexMatrix& u, const SamplerConfig& cfg);

EpEpdResult to_result(const McEstimate& e);

}  // namespace epd
