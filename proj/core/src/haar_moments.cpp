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

#include "epd/haar_moments.hpp"

#include <string>
#include <vector>

#include "epd/errors.hpp"

namespace epd {

MomentConstants moment_constants(std::size_t d) {
  if (d == 0) throw DomainError("moment_constants: dimension must be at least 1");
  const auto n = static_cast<std::int64_t>(d);
  return {Rational(1, n * (n + 1)), Rational(1, n * (n + 1) * (n + 2) * (n + 3))};
}

ComplexMatrix StateAverage::realize(std::size_t d) const {
  ComplexMatrix m = epd::realize(symmetrizer, SubsystemLayout::uniform(d, symmetrizer.degree()));
  m *= normalization.to_double();
  return m;
}

StateAverage pure_state_haar_average(std::size_t d, std::size_t copies) {
  if (d == 0 || copies == 0) throw DomainError("pure_state_haar_average: d and copies must be positive");
  const auto n = static_cast<std::int64_t>(d);
  const auto k = static_cast<std::int64_t>(copies);
  return {symmetrizer(copies), Rational(1, binomial(n + k - 1, k))};
}

ComplexMatrix MomentState::realize() const {
  ComplexMatrix m = epd::realize(sum, layout);
  m *= prefactor.to_double();
  return m;
}

MomentState omega(std::size_t order, std::size_t d1, std::size_t d2) {
  if (order != 2 && order != 4) throw DomainError("omega: order must be 2 or 4, got " + std::to_string(order));
  const auto c1 = moment_constants(d1);
  const auto c2 = moment_constants(d2);
  const std::size_t wires = 2 * order;
  std::vector<std::size_t> first, second;
  for (std::size_t c = 0; c < order; ++c) {
    first.push_back(2 * c);
    second.push_back(2 * c + 1);
  }
  // The projector weights 1/order! each cancel one factor of the (order!)^2
  // prefactor, so the product below equals const1·const2·Σ_{ν1,ν2} ν1ν2.
  const Rational f = factorial(static_cast<unsigned>(order));
  const Rational prefactor = order == 2 ? f * f * c1.second * c2.second : f * f * c1.fourth * c2.fourth;
  FormalGroupSum sum = multiply_sums(symmetric_projector(wires, first, +1), symmetric_projector(wires, second, +1));
  return {order, prefactor, std::move(sum), SubsystemLayout::alternating(d1, d2, order)};
}

}  // namespace epd
