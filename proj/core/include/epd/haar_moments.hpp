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

#include "epd/group_sum.hpp"
#include "epd/rational.hpp"
#include "epd/tensor.hpp"

namespace epd {

/// Normalizers of the second and fourth Haar moments on C^d:
/// second = 1/(d(d+1)), fourth = 1/(d(d+1)(d+2)(d+3)).
struct MomentConstants {
  Rational second;
  Rational fourth;
};

/// Throws DomainError for d = 0.
MomentConstants moment_constants(std::size_t d);

/// E_ψ |ψ><ψ|^{⊗copies} = normalization · realize(symmetrizer).
struct StateAverage {
  FormalGroupSum symmetrizer;
  Rational normalization;  // 1 / binom(d + copies − 1, copies)

  ComplexMatrix realize(std::size_t d) const;
};

/// Throws DomainError for d = 0 or copies = 0.
StateAverage pure_state_haar_average(std::size_t d, std::size_t copies);

/// Average of (|a><a| ⊗ |b><b|)^{⊗order} over Haar-random |a> ∈ C^{d1},
/// |b> ∈ C^{d2}, kept as prefactor × (product of partial symmetrizers).
///
/// Subsystems alternate d1, d2, d1, d2, ... so copy c occupies positions
/// 2c and 2c+1.
struct MomentState {
  std::size_t order = 0;
  Rational prefactor;
  FormalGroupSum sum;
  SubsystemLayout layout;

  /// Dense matrix; only sensible for small (d1·d2)^order.
  ComplexMatrix realize() const;
};

/// order must be 2 or 4; throws DomainError otherwise or for zero dims.
MomentState omega(std::size_t order, std::size_t d1, std::size_t d2);

}  // namespace epd
