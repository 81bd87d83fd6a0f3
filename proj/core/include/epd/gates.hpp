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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "epd/engine.hpp"
#include "epd/tensor.hpp"

namespace epd {

enum class GateFamily { cnot, cp, cu, swap_alpha, iswap, kak, swap, gcx, f4 };

/// Parameter of a gate family with its default value.
struct GateParameter {
  std::string name;
  double default_value = 0.0;
};

std::string_view family_name(GateFamily f);
/// Accepts the names printed by family_name; throws FormatError otherwise.
GateFamily parse_family(std::string_view name);
const std::vector<GateFamily>& all_families();
/// Parameters accepted by a family, in canonical order.
const std::vector<GateParameter>& family_parameters(GateFamily f);

/// A catalog gate: family, fully resolved parameters and the bipartition.
///
/// Parameters (angles in radians):
///   cp: theta ∈ [0, 2π]          cu: theta ∈ [0, 2π], alpha, beta, delta
///   swap_alpha: alpha ∈ [0, 1]   iswap: theta ∈ [0, π], phi
///   kak: b1, b2, b3              swap, gcx: d (integer; swap ≥ 1, gcx ≥ 2)
struct GateSpec {
  GateFamily family = GateFamily::cnot;
  std::map<std::string, double> params;
  std::size_t d1 = 2;
  std::size_t d2 = 2;

  double param(const std::string& name) const;
  std::string label() const;
};

/// Fills defaults, validates names and ranges, and sets the dimensions.
/// Throws FormatError for unknown parameter names and DomainError for
/// out-of-range or non-finite values.
GateSpec make_spec(GateFamily family, const std::map<std::string, double>& params = {});

ComplexMatrix build(const GateSpec& spec);

/// Closed-form EP and EPD; method = closed_form, zero standard errors.
EpEpdResult closed_form_ep_epd(const GateSpec& spec);

/// EPD / EP from the closed forms. Throws DomainError when EP vanishes.
double eta_ratio(const GateSpec& spec);

/// Closed-form EPD² of the generalized controlled shift, numerator over
/// (d+1)⁴(d+2)²(d+3)²; the numerator depends on the parity of d.
double gcx_epd_squared(std::size_t d);
std::int64_t gcx_epd_numerator(std::size_t d);

/// Closed forms in the canonical parameters of a two-qubit nonlocal core.
double kak_ep(double b1, double b2, double b3);
double kak_epd(double b1, double b2, double b3);

}  // namespace epd
