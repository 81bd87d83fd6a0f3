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

#include "epd/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "epd/errors.hpp"

namespace epd {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct FamilyInfo {
  GateFamily family;
  std::string_view name;
  std::vector<GateParameter> params;
};

const std::vector<FamilyInfo>& catalog() {
  static const std::vector<FamilyInfo> info = {
      {GateFamily::cnot, "cnot", {}},
      {GateFamily::cp, "cp", {{"theta", pi}}},
      {GateFamily::cu, "cu", {{"theta", pi}, {"alpha", 0.0}, {"beta", 0.0}, {"delta", 0.0}}},
      {GateFamily::swap_alpha, "swap_alpha", {{"alpha", 0.5}}},
      {GateFamily::iswap, "iswap", {{"theta", pi}, {"phi", 0.0}}},
      {GateFamily::kak, "kak", {{"b1", pi / 4}, {"b2", 0.0}, {"b3", 0.0}}},
      {GateFamily::swap, "swap", {{"d", 2.0}}},
      {GateFamily::gcx, "gcx", {{"d", 2.0}}},
      {GateFamily::f4, "f4", {}},
  };
  return info;
}

const FamilyInfo& info_of(GateFamily f) {
  for (const auto& i : catalog())
    if (i.family == f) return i;
  throw FormatError("unknown gate family");
}

void require_range(const GateSpec& s, const char* name, double lo, double hi) {
  const double v = s.param(name);
  if (v < lo || v > hi) {
    std::ostringstream msg;
    msg << family_name(s.family) << ": " << name << " = " << v << " outside [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }
}

std::size_t integer_param(const GateSpec& s, const char* name, std::size_t min) {
  const double v = s.param(name);
  if (v != std::floor(v) || v < static_cast<double>(min) || v > 64.0) {
    std::ostringstream msg;
    msg << family_name(s.family) << ": " << name << " must be an integer in [" << min << ", 64], got " << v;
    throw DomainError(msg.str());
  }
  return static_cast<std::size_t>(v);
}

ComplexMatrix controlled(const ComplexMatrix& target) {
  ComplexMatrix u = ComplexMatrix::identity(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) u(2 + r, 2 + c) = target(r, c);
  return u;
}

ComplexMatrix swap_matrix(std::size_t d) {
  ComplexMatrix u(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) u(b * d + a, a * d + b) = 1.0;
  return u;
}

ComplexMatrix kak_matrix(double b1, double b2, double b3) {
  const double cm = std::cos(b1 - b2), sm = std::sin(b1 - b2);
  const double cp = std::cos(b1 + b2), sp = std::sin(b1 + b2);
  const Complex em = std::exp(-kI * b3), ep = std::exp(kI * b3);
  ComplexMatrix u(4, 4);
  u(0, 0) = em * cm;
  u(0, 3) = -kI * em * sm;
  u(3, 0) = -kI * em * sm;
  u(3, 3) = em * cm;
  u(1, 1) = ep * cp;
  u(1, 2) = -kI * ep * sp;
  u(2, 1) = -kI * ep * sp;
  u(2, 2) = ep * cp;
  return u;
}

}  // namespace

std::string_view family_name(GateFamily f) { return info_of(f).name; }

GateFamily parse_family(std::string_view name) {
  for (const auto& i : catalog())
    if (i.name == name) return i.family;
  std::string known;
  for (const auto& i : catalog()) known += (known.empty() ? "" : ", ") + std::string(i.name);
  throw FormatError("unknown gate '" + std::string(name) + "' (known: " + known + ")");
}

const std::vector<GateFamily>& all_families() {
  static const std::vector<GateFamily> families = [] {
    std::vector<GateFamily> f;
    for (const auto& i : catalog()) f.push_back(i.family);
    return f;
  }();
  return families;
}

const std::vector<GateParameter>& family_parameters(GateFamily f) { return info_of(f).params; }

double GateSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw FormatError(std::string(family_name(family)) + " has no parameter '" + name + "'");
  return it->second;
}

std::string GateSpec::label() const {
  std::ostringstream s;
  s.precision(12);
  s << family_name(family);
  if (!params.empty()) {
    s << '(';
    bool first = true;
    for (const auto& p : family_parameters(family)) {
      s << (first ? "" : ", ") << p.name << '=' << param(p.name);
      first = false;
    }
    s << ')';
  }
  return s.str();
}

GateSpec make_spec(GateFamily family, const std::map<std::string, double>& params) {
  GateSpec s;
  s.family = family;
  for (const auto& p : family_parameters(family)) s.params[p.name] = p.default_value;
  for (const auto& [name, value] : params) {
    if (!s.params.contains(name)) {
      throw FormatError(std::string(family_name(family)) + " has no parameter '" + name + "'");
    }
    if (!std::isfinite(value)) throw DomainError(std::string(family_name(family)) + ": " + name + " is not finite");
    s.params[name] = value;
  }

  switch (family) {
    case GateFamily::cp:
      require_range(s, "theta", 0.0, 2 * pi);
      break;
    case GateFamily::cu:
      require_range(s, "theta", 0.0, 2 * pi);
      break;
    case GateFamily::swap_alpha:
      require_range(s, "alpha", 0.0, 1.0);
      break;
    case GateFamily::iswap:
      require_range(s, "theta", 0.0, pi);
      break;
    case GateFamily::swap:
      s.d1 = s.d2 = integer_param(s, "d", 1);
      break;
    case GateFamily::gcx:
      s.d1 = s.d2 = integer_param(s, "d", 2);
      break;
    case GateFamily::cnot:
    case GateFamily::kak:
    case GateFamily::f4:
      break;
  }
  return s;
}

ComplexMatrix build(const GateSpec& spec) {
  switch (spec.family) {
    case GateFamily::cnot:
      return controlled(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
    case GateFamily::cp:
      return controlled(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::exp(kI * spec.param("theta"))}}));
    case GateFamily::cu: {
      const double t = spec.param("theta"), a = spec.param("alpha"), b = spec.param("beta"), d = spec.param("delta");
      const double c = std::cos(t / 2), s = std::sin(t / 2);
      return controlled(ComplexMatrix::from_rows({
          {std::exp(kI * (d + a / 2 + b / 2)) * c, std::exp(kI * (d + a / 2 - b / 2)) * s},
          {-std::exp(kI * (d - a / 2 + b / 2)) * s, std::exp(kI * (d - a / 2 - b / 2)) * c},
      }));
    }
    case GateFamily::swap_alpha: {
      const Complex e = std::exp(kI * (pi * spec.param("alpha")));
      ComplexMatrix u = ComplexMatrix::identity(4);
      u(1, 1) = u(2, 2) = (1.0 + e) / 2.0;
      u(1, 2) = u(2, 1) = (1.0 - e) / 2.0;
      return u;
    }
    case GateFamily::iswap: {
      const double t = spec.param("theta"), f = spec.param("phi");
      ComplexMatrix u = ComplexMatrix::identity(4);
      u(1, 1) = u(2, 2) = std::cos(t / 2);
      u(1, 2) = kI * std::exp(kI * f) * std::sin(t / 2);
      u(2, 1) = kI * std::exp(-kI * f) * std::sin(t / 2);
      return u;
    }
    case GateFamily::kak:
      return kak_matrix(spec.param("b1"), spec.param("b2"), spec.param("b3"));
    case GateFamily::swap:
      return swap_matrix(spec.d1);
    case GateFamily::gcx: {
      // Σ_a |a><a| ⊗ X^a with X|j> = |j+1 mod d>.
      const std::size_t d = spec.d1;
      ComplexMatrix u(d * d, d * d);
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) u(a * d + (j + a) % d, a * d + j) = 1.0;
      return u;
    }
    case GateFamily::f4: {
      ComplexMatrix u(4, 4);
      for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n) u(m, n) = 0.5 * std::exp(kI * (2 * pi * double(m * n) / 4));
      return u;
    }
  }
  throw FormatError("build: unsupported gate family");
}

double kak_ep(double b1, double b2, double b3) {
  const double c1 = std::cos(4 * b1), c2 = std::cos(4 * b2), c3 = std::cos(4 * b3);
  return (3.0 - (c1 * c2 + c2 * c3 + c3 * c1)) / 18.0;
}

double kak_epd(double b1, double b2, double b3) {
  auto c4 = [](double x) { return std::cos(4 * x); };
  auto c8 = [](double x) { return std::cos(8 * x); };
  const double bracket = 57.0 - 4.0 * c8(b2) - 23.0 * c4(b2) * c4(b3) +
                         c4(b1) * ((c8(b2) - 23.0) * c4(b3) + (c8(b3) - 23.0) * c4(b2)) + c8(b3) * (7.0 * c8(b2) - 4.0) +
                         c8(b1) * (7.0 * c8(b2) + c4(b2) * c4(b3) + 7.0 * c8(b3) - 4.0);
  return std::sqrt(std::max(bracket, 0.0)) / (45.0 * std::sqrt(2.0));
}

std::int64_t gcx_epd_numerator(std::size_t d) {
  const auto n = static_cast<std::int64_t>(d);
  const std::int64_t even = 8 * n * n * n * n * n + 34 * n * n * n * n + 8 * n * n * n - 38 * n * n - 4 * n;
  return n % 2 == 0 ? even : even - 2 * n * (n + 1) * (n + 1);
}

double gcx_epd_squared(std::size_t d) {
  const double x = static_cast<double>(d);
  const double den = std::pow(x + 1, 4) * std::pow(x + 2, 2) * std::pow(x + 3, 2);
  return static_cast<double>(gcx_epd_numerator(d)) / den;
}

EpEpdResult closed_form_ep_epd(const GateSpec& spec) {
  const double sqrt11 = std::sqrt(11.0), sqrt5 = std::sqrt(5.0);
  EpEpdResult r;
  r.method = Method::closed_form;
  switch (spec.family) {
    case GateFamily::cnot:
      r.ep = 2.0 / 9.0;
      r.epd = 2.0 * sqrt11 / 45.0;
      break;
    case GateFamily::cp: {
      const double s = std::pow(std::sin(spec.param("theta") / 2), 2);
      r.ep = 2.0 / 9.0 * s;
      r.epd = 2.0 * sqrt11 / 45.0 * s;
      break;
    }
    case GateFamily::cu: {
      const double x = std::pow(std::cos(spec.param("theta") / 2), 2) *
                       (1.0 + std::cos(spec.param("alpha") + spec.param("beta")));
      r.ep = 5.0 / 9.0 - (3.0 + x) / 9.0;
      r.epd = sqrt11 / 9.0 - sqrt11 / 45.0 * (3.0 + x);
      break;
    }
    case GateFamily::swap_alpha: {
      const double s = std::pow(std::sin(pi * spec.param("alpha")), 2);
      r.ep = s / 6.0;
      r.epd = sqrt5 / 15.0 * s;
      break;
    }
    case GateFamily::iswap: {
      const double t = spec.param("theta");
      const double s = std::pow(std::sin(t / 2), 2);
      r.ep = 2.0 / 9.0 * s * (2.0 - s);
      r.epd = 2.0 / 45.0 * s * std::sqrt(34.0 + 30.0 * std::cos(t) + 7.0 * std::cos(2 * t));
      break;
    }
    case GateFamily::kak:
      r.ep = kak_ep(spec.param("b1"), spec.param("b2"), spec.param("b3"));
      r.epd = kak_epd(spec.param("b1"), spec.param("b2"), spec.param("b3"));
      break;
    case GateFamily::swap:
      break;
    case GateFamily::gcx: {
      const double d = static_cast<double>(spec.d1);
      r.ep = d * (d - 1) / ((d + 1) * (d + 1));
      r.epd = std::sqrt(gcx_epd_squared(spec.d1));
      break;
    }
    case GateFamily::f4:
      // Locally equivalent to the nonlocal core at (π/4, π/4, π/8).
      r.ep = kak_ep(pi / 4, pi / 4, pi / 8);
      r.epd = kak_epd(pi / 4, pi / 4, pi / 8);
      break;
  }
  // Trig round-off can leave −1e-17 where the value is exactly zero.
  r.ep = std::max(r.ep, 0.0);
  r.epd = std::max(r.epd, 0.0);
  return r;
}

double eta_ratio(const GateSpec& spec) {
  const auto r = closed_form_ep_epd(spec);
  if (r.ep <= 1e-14) {
    throw DomainError("eta ratio undefined: " + spec.label() + " has zero entangling power");
  }
  return r.epd / r.ep;
}

}  // namespace epd
