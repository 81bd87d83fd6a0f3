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
#include <span>
#include <string_view>

#include "epd/network.hpp"
#include "epd/tensor.hpp"

namespace epd {

enum class Method { exact_dense, exact_cycle, closed_form, monte_carlo };

std::string_view method_name(Method m);

/// Entangling power (mean linear entropy over Haar product inputs) and its
/// standard deviation. Standard errors are zero for exact methods.
struct EpEpdResult {
  double ep = 0.0;
  double epd = 0.0;
  Method method = Method::exact_dense;
  double se_ep = 0.0;
  double se_epd = 0.0;
};

/// Largest d1·d2 for the dense four-copy evaluation.
inline constexpr std::size_t kDenseFourCopyLimit = 4;
/// Largest d1·d2 for the network evaluation of the four-copy traces.
inline constexpr std::size_t kCycleLimit = 64;
/// Radicands in [−kRadicandClamp, 0] are treated as zero.
inline constexpr double kRadicandClamp = 1e-9;
/// Double-precision radicands below this are re-evaluated with extended
/// precision contractions, since the square root turns round-off of order
/// 1e-16 into EPD noise of order 1e-8.
inline constexpr double kRefineBelow = 1e-6;

/// 1 − Tr ρ² of the reduced state on `keep` (0-based subsystems).
/// Throws DomainError for an unnormalized state.
double linear_entropy(const PureState& state, std::span<const std::size_t> keep);
/// Bipartite shortcut: 1 − Tr ρ_A² for amplitudes on C^{d1} ⊗ C^{d2}. No
/// normalization check.
double linear_entropy(std::span<const Complex> amplitudes, std::size_t d1, std::size_t d2);

/// Validates shape and unitarity; throws DimensionError / DomainError.
void require_unitary(const ComplexMatrix& u, std::size_t d1, std::size_t d2);

/// EP from the two-copy moment state, evaluated densely on (d1·d2)².
double ep_exact(const ComplexMatrix& u, std::size_t d1, std::size_t d2);

/// Linear operator entanglement of U across the (d1 | d2) cut (`direct`)
/// and of U·SWAP (`swapped`, defined for any d1, d2 through the 2↔4 wire
/// transposition).
struct OperatorEntanglement {
  double direct = 0.0;
  double swapped = 0.0;
};
OperatorEntanglement operator_entanglement(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                           Precision precision = Precision::standard);
/// EP assembled from the two operator entanglements.
double ep_from_operator_entanglement(const OperatorEntanglement& oe, std::size_t d1, std::size_t d2);

/// EPD from the dense four-copy moment state. Requires d1·d2 ≤ 4, else
/// FeasibilityError.
double epd_exact_dense(const ComplexMatrix& u, std::size_t d1, std::size_t d2);
EpEpdResult ep_epd_dense(const ComplexMatrix& u, std::size_t d1, std::size_t d2);

/// Intermediate quantities of the four-copy network evaluation. `f_*` are
/// the sums over S(even wires) × S(odd wires) of the sandwich traces
/// against the identity, the 1↔3 transposition, and 1↔3 with 5↔7.
struct CycleBreakdown {
  double ep = 0.0;
  double f_identity = 0.0;
  double f_single = 0.0;
  double f_double = 0.0;
  double radicand = 0.0;
  double epd = 0.0;
  std::size_t term_count = 0;      // summands before grouping
  std::size_t distinct_terms = 0;  // networks actually contracted
  Precision precision = Precision::standard;
};

struct CycleOptions {
  /// 0 picks the hardware concurrency. Never changes the result.
  std::size_t threads = 0;
  /// Starting precision.
  Precision precision = Precision::standard;
  /// Re-run in extended precision when the radicand is below kRefineBelow.
  bool refine = true;
};

/// Four-copy traces as tensor networks; requires d1·d2 ≤ 64. Throws
/// ConsistencyError for a radicand below −kRadicandClamp.
CycleBreakdown epd_cycle_breakdown(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                   const CycleOptions& options = {});
double epd_exact_cycle(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const CycleOptions& options = {});
EpEpdResult ep_epd_cycle(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const CycleOptions& options = {});

/// Sufficient conditions for vanishing EP: U⊗² commuting with the 1↔3
/// symmetrizer (`condition_i`) or with the product of both partial
/// symmetrizers (`condition_ii`).
struct VanishingReport {
  bool condition_i = false;
  bool condition_ii = false;
  bool ep_zero = false;
  double ep = 0.0;
  double defect_i = 0.0;   // max-norm of the commutators
  double defect_ii = 0.0;
  bool implication_holds = true;  // (i or ii) ⇒ ep_zero
};
VanishingReport check_vanishing_conditions(const ComplexMatrix& u, std::size_t d1, std::size_t d2, double tol = kScalarTol);

namespace detail {
/// EP with a configurable sign of the final partial projector. Production
/// code uses −1; +1 exists only to let tests confirm that a flipped sign is
/// caught.
double ep_with_projector_sign(const ComplexMatrix& u, std::size_t d1, std::size_t d2, int sign);
}  // namespace detail

}  // namespace epd
