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
#include <numbers>

#include "epd/engine.hpp"
#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Catalog, NamesRoundTrip) {
  for (GateFamily f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("toffoli"), FormatError);
  EXPECT_EQ(family_parameters(GateFamily::cu).size(), 4u);
  EXPECT_TRUE(family_parameters(GateFamily::cnot).empty());
}

TEST(Catalog, SpecsValidateNamesAndRanges) {
  EXPECT_THROW(make_spec(GateFamily::cp, {{"alpha", 1.0}}), FormatError);
  EXPECT_THROW(make_spec(GateFamily::cp, {{"theta", 7.0}}), DomainError);
  EXPECT_THROW(make_spec(GateFamily::swap_alpha, {{"alpha", 1.5}}), DomainError);
  EXPECT_THROW(make_spec(GateFamily::iswap, {{"theta", -0.1}}), DomainError);
  EXPECT_THROW(make_spec(GateFamily::kak, {{"b1", std::nan("")}}), DomainError);
  EXPECT_THROW(make_spec(GateFamily::gcx, {{"d", 1.0}}), DomainError);
  EXPECT_THROW(make_spec(GateFamily::swap, {{"d", 2.5}}), DomainError);
  const auto spec = make_spec(GateFamily::gcx, {{"d", 4.0}});
  EXPECT_EQ(spec.d1, 4u);
  EXPECT_EQ(spec.d2, 4u);
  EXPECT_EQ(make_spec(GateFamily::cp).label(), "cp(theta=3.14159265359)");
  EXPECT_EQ(make_spec(GateFamily::cnot).label(), "cnot");
  EXPECT_THROW(spec.param("theta"), FormatError);
}

TEST(Catalog, EveryDefaultGateIsUnitary) {
  for (GateFamily f : all_families()) {
    const auto spec = make_spec(f);
    const auto u = build(spec);
    EXPECT_EQ(u.rows(), spec.d1 * spec.d2) << family_name(f);
    EXPECT_TRUE(is_unitary(u)) << family_name(f);
  }
}

TEST(Catalog, KnownIdentities) {
  EXPECT_MATRIX_NEAR(build(make_spec(GateFamily::swap_alpha, {{"alpha", 1.0}})), build(make_spec(GateFamily::swap)),
                     1e-15);
  EXPECT_MATRIX_NEAR(build(make_spec(GateFamily::gcx)), build(make_spec(GateFamily::cnot)), 0.0);
  // CZ = (1 ⊗ H) CNOT (1 ⊗ H).
  const auto h = kron(ComplexMatrix::identity(2), testing::hadamard());
  EXPECT_MATRIX_NEAR(build(make_spec(GateFamily::cp, {{"theta", kPi}})), h * build(make_spec(GateFamily::cnot)) * h,
                     1e-15);
  EXPECT_NEAR(ep_exact(build(make_spec(GateFamily::kak)), 2, 2), 2.0 / 9.0, 1e-12);
}

TEST(ClosedForms, ReferenceValues) {
  const double sqrt11 = std::sqrt(11.0);
  const auto cnot = closed_form_ep_epd(make_spec(GateFamily::cnot));
  EXPECT_DOUBLE_EQ(cnot.ep, 2.0 / 9.0);
  EXPECT_DOUBLE_EQ(cnot.epd, 2.0 * sqrt11 / 45.0);
  EXPECT_EQ(cnot.method, Method::closed_form);
  const auto root_swap = closed_form_ep_epd(make_spec(GateFamily::swap_alpha));
  EXPECT_DOUBLE_EQ(root_swap.ep, 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(root_swap.epd, std::sqrt(5.0) / 15.0);
  const auto swap = closed_form_ep_epd(make_spec(GateFamily::swap, {{"d", 5.0}}));
  EXPECT_EQ(swap.ep, 0.0);
  EXPECT_EQ(swap.epd, 0.0);
  EXPECT_NEAR(kak_ep(kPi / 4, 0, 0), 2.0 / 9.0, 1e-15);
  EXPECT_NEAR(kak_epd(kPi / 4, 0, 0), 2.0 * sqrt11 / 45.0, 1e-15);
  EXPECT_NEAR(kak_ep(0, 0, 0), 0.0, 1e-15);
  EXPECT_NEAR(kak_epd(0, 0, 0), 0.0, 1e-15);
}

TEST(ClosedForms, IswapIsIndependentOfPhase) {
  for (double theta : {0.3, 1.2, kPi}) {
    const auto a = closed_form_ep_epd(make_spec(GateFamily::iswap, {{"theta", theta}, {"phi", 0.0}}));
    const auto b = closed_form_ep_epd(make_spec(GateFamily::iswap, {{"theta", theta}, {"phi", 1.7}}));
    EXPECT_EQ(a.ep, b.ep);
    EXPECT_EQ(a.epd, b.epd);
    const auto u = build(make_spec(GateFamily::iswap, {{"theta", theta}, {"phi", 1.7}}));
    const auto engine = ep_epd_cycle(u, 2, 2, {.threads = 1});
    EXPECT_NEAR(engine.ep, a.ep, 1e-12);
    EXPECT_NEAR(engine.epd, a.epd, 1e-9);
  }
}

TEST(ClosedForms, EtaRatios) {
  EXPECT_NEAR(eta_ratio(make_spec(GateFamily::cu, {{"theta", 1.0}, {"alpha", 0.3}})), std::sqrt(11.0) / 5.0, 1e-12);
  EXPECT_NEAR(eta_ratio(make_spec(GateFamily::cp, {{"theta", 0.4}})), std::sqrt(11.0) / 5.0, 1e-12);
  EXPECT_NEAR(eta_ratio(make_spec(GateFamily::swap_alpha, {{"alpha", 0.3}})), 2.0 * std::sqrt(5.0) / 5.0, 1e-12);
  EXPECT_NEAR(eta_ratio(make_spec(GateFamily::iswap, {{"theta", kPi / 2}})), 2.0 * std::sqrt(27.0) / 15.0, 1e-12);
  EXPECT_THROW(eta_ratio(make_spec(GateFamily::swap)), DomainError);
  EXPECT_THROW(eta_ratio(make_spec(GateFamily::cp, {{"theta", 0.0}})), DomainError);
}

TEST(ClosedForms, GeneralizedShiftNumerators) {
  EXPECT_EQ(gcx_epd_numerator(2), 704);
  EXPECT_EQ(gcx_epd_numerator(3), 4464);
  EXPECT_EQ(gcx_epd_numerator(4), 16784);
  EXPECT_EQ(gcx_epd_numerator(5), 45920);
  EXPECT_EQ(gcx_epd_numerator(6), 106608);
  EXPECT_NEAR(gcx_epd_squared(2), 44.0 / 2025.0, 1e-16);
  EXPECT_NEAR(gcx_epd_squared(2), std::pow(2.0 * std::sqrt(11.0) / 45.0, 2), 1e-16);
}

TEST(ClosedForms, GeneralizedShiftMatchesEngine) {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto spec = make_spec(GateFamily::gcx, {{"d", static_cast<double>(d)}});
    const auto closed = closed_form_ep_epd(spec);
    const auto engine = ep_epd_cycle(build(spec), d, d, {.threads = 1});
    EXPECT_NEAR(engine.ep, closed.ep, 1e-10) << "d=" << d;
    EXPECT_NEAR(engine.epd, closed.epd, 1e-8) << "d=" << d;
  }
}

struct FamilyGrid {
  GateFamily family;
  const char* axis;
  double hi;
  std::map<std::string, double> fixed;
};

class ClosedVsEngine : public ::testing::TestWithParam<FamilyGrid> {};

TEST_P(ClosedVsEngine, TwentyPointGrid) {
  const auto& g = GetParam();
  for (int k = 0; k < 20; ++k) {
    auto params = g.fixed;
    params[g.axis] = g.hi * (k + 0.5) / 20.0;
    const auto spec = make_spec(g.family, params);
    const auto closed = closed_form_ep_epd(spec);
    const auto engine = ep_epd_dense(build(spec), 2, 2);
    EXPECT_NEAR(engine.ep, closed.ep, 1e-10) << spec.label();
    EXPECT_NEAR(engine.epd, closed.epd, 1e-7) << spec.label();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Families, ClosedVsEngine,
    ::testing::Values(FamilyGrid{GateFamily::cp, "theta", 2 * kPi, {}},
                      FamilyGrid{GateFamily::cu, "theta", 2 * kPi, {{"alpha", 0.3}, {"beta", 0.5}, {"delta", 0.1}}},
                      FamilyGrid{GateFamily::swap_alpha, "alpha", 1.0, {}},
                      FamilyGrid{GateFamily::iswap, "theta", kPi, {{"phi", 0.7}}},
                      FamilyGrid{GateFamily::kak, "b2", kPi / 4, {{"b1", kPi / 4}, {"b3", 0.2}}}),
    [](const auto& info) { return std::string(family_name(info.param.family)); });

TEST(ClosedForms, FourierGateMatchesEngine) {
  const auto spec = make_spec(GateFamily::f4);
  const auto closed = closed_form_ep_epd(spec);
  const auto engine = ep_epd_dense(build(spec), 2, 2);
  EXPECT_NEAR(engine.ep, closed.ep, 1e-12);
  EXPECT_NEAR(engine.epd, closed.epd, 1e-8);
}

}  // namespace
}  // namespace epd
