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
#include <span>
#include <vector>

#include "epd/network.hpp"
#include "epd/permutation.hpp"
#include "epd/rational.hpp"
#include "epd/tensor.hpp"

namespace epd {

/// One summand coefficient · Tr(U^{⊗k} V(sigma) U†^{⊗k} V(tau)) on the
/// 2k-wire space where copy c owns wires 2c (dimension d1) and 2c+1 (d2).
struct TraceTerm {
  Permutation sigma;
  Permutation tau;
  Rational coefficient{1};
};

/// A set of terms that evaluate to the same real part, represented once.
struct TermClass {
  TraceTerm representative;
  std::int64_t multiplicity = 0;
};

/// Closed network for Tr(U^{⊗k} V(sigma) U†^{⊗k} V(tau)), k = sigma.degree()/2.
///
/// Throws LayoutError when d1 != d2 and a permutation moves a wire onto one
/// of the other dimension, DimensionError when `u` is not (d1·d2)-square.
std::vector<NetworkNode> sandwich_network(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                          const Permutation& sigma, const Permutation& tau);

/// Contracts sandwich_network(u, d1, d2, sigma, tau).
Complex sandwich_trace(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const Permutation& sigma,
                       const Permutation& tau, Precision precision = Precision::standard);

/// Σ_{ν1 ∈ S(even wires), ν2 ∈ S(odd wires)} of (ν1ν2, tau), unit coefficients.
std::vector<TraceTerm> moment_terms(std::size_t copies, const Permutation& tau);

/// Groups terms whose real parts agree for every U: simultaneous relabeling
/// of whole copies, plus (sigma, tau) ↔ (sigma⁻¹, tau⁻¹), which conjugates
/// the trace. Coefficients must be equal across merged terms; classes come
/// back in a deterministic order.
std::vector<TermClass> group_terms(std::span<const TraceTerm> terms);

/// Tr((A_0 ⊗ ... ⊗ A_{k−1}) V(p)) as the product over cycles of p of the
/// trace of the ordered product A_l A_{p⁻¹(l)} A_{p⁻²(l)} ... Throws
/// DimensionError unless all factors are square of one common size and
/// their count equals p.degree().
Complex cycle_trace(std::span<const ComplexMatrix> factors, const Permutation& p);

/// Sums `values` pairwise in a fixed tree, independent of how they were
/// produced.
double tree_sum(std::span<const double> values);

}  // namespace epd
