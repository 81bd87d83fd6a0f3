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

#include <random>

#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "epd/group_sum.hpp"
#include "epd/trace_terms.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

TEST(CycleTrace, Examples) {
  std::mt19937_64 gen(1);
  const ComplexMatrix f[] = {testing::random_square(2, gen), testing::random_square(2, gen),
                             testing::random_square(2, gen)};
  EXPECT_COMPLEX_NEAR(cycle_trace(f, Permutation(3)), trace(f[0]) * trace(f[1]) * trace(f[2]), 1e-12);
  const auto swap12 = Permutation::parse("(12)", 3);
  EXPECT_COMPLEX_NEAR(cycle_trace(f, swap12), trace(f[0] * f[1]) * trace(f[2]), 1e-12);
  EXPECT_COMPLEX_NEAR(cycle_trace(std::span<const ComplexMatrix>{}, Permutation(0)), 1.0, 0.0);
  EXPECT_THROW(cycle_trace(f, Permutation(2)), DimensionError);
}

TEST(CycleTrace, AgreesWithDenseEvaluation) {
  std::mt19937_64 gen(2);
  const auto layout = SubsystemLayout::uniform(2, 4);
  const auto perms = all_permutations(4);
  for (std::size_t i = 0; i < 200; ++i) {
    std::vector<ComplexMatrix> f;
    for (int k = 0; k < 4; ++k) f.push_back(testing::random_square(2, gen));
    const auto& p = perms[i % perms.size()];
    const auto product = kron(kron(f[0], f[1]), kron(f[2], f[3]));
    EXPECT_COMPLEX_NEAR(cycle_trace(f, p), trace_with_permutation(product, p, layout), 1e-9) << p.to_string();
  }
}

TEST(MomentTerms, CountAndGrouping) {
  const auto tau = Permutation::parse("(13)(57)", 8);
  const auto terms = moment_terms(4, tau);
  EXPECT_EQ(terms.size(), 576u);
  const auto classes = group_terms(terms);
  std::int64_t total = 0;
  for (const auto& c : classes) total += c.multiplicity;
  EXPECT_EQ(total, 576);
  EXPECT_LT(classes.size(), terms.size());
  EXPECT_TRUE(group_terms(std::span<const TraceTerm>{}).empty());
  EXPECT_THROW(moment_terms(2, tau), DimensionError);
}

TEST(MomentTerms, GroupedSumMatchesFullSum) {
  std::mt19937_64 gen(3);
  const auto u = testing::random_square(4, gen);
  const auto tau = Permutation::parse("(13)", 4);
  const auto terms = moment_terms(2, tau);
  double full = 0.0;
  for (const auto& t : terms) full += sandwich_trace(u, 2, 2, t.sigma, t.tau).real();
  double grouped = 0.0;
  for (const auto& c : group_terms(terms))
    grouped += static_cast<double>(c.multiplicity) *
               sandwich_trace(u, 2, 2, c.representative.sigma, c.representative.tau).real();
  EXPECT_NEAR(grouped, full, 1e-10);
}

TEST(SandwichTrace, IdentityOperatorCountsCycles) {
  // With U = 1, Tr(V(σ)V(τ)) = d^{cycles(στ)} for qubits.
  const auto id = ComplexMatrix::identity(4);
  const auto sigma = Permutation::parse("(13)", 4), tau = Permutation::parse("(24)", 4);
  EXPECT_COMPLEX_NEAR(sandwich_trace(id, 2, 2, sigma, tau), 4.0, 1e-12);
  EXPECT_COMPLEX_NEAR(sandwich_trace(id, 2, 2, sigma, sigma), 16.0, 1e-12);
}

TEST(SandwichTrace, Errors) {
  const auto u = ComplexMatrix::identity(6);
  const auto cross = Permutation::parse("(12)", 4);
  EXPECT_THROW(sandwich_network(u, 2, 3, cross, Permutation(4)), LayoutError);
  EXPECT_THROW(sandwich_network(u, 2, 2, Permutation(4), Permutation(4)), DimensionError);
  EXPECT_THROW(sandwich_network(u, 2, 3, Permutation(3), Permutation(3)), DimensionError);
  EXPECT_THROW(sandwich_network(u, 2, 3, Permutation(4), Permutation(6)), DimensionError);
  // Equal dimensions allow any wire permutation.
  EXPECT_NO_THROW(sandwich_network(ComplexMatrix::identity(9), 3, 3, cross, Permutation(4)));
}

TEST(TreeSum, FixedPairingIsExactOnSimpleInputs) {
  EXPECT_EQ(tree_sum(std::span<const double>{}), 0.0);
  const double one[] = {2.5};
  EXPECT_EQ(tree_sum(one), 2.5);
  const double values[] = {1.0, 1e16, -1e16, 1.0};
  EXPECT_EQ(tree_sum(values), 0.0);  // (1 + 1e16) + (−1e16 + 1)
  std::vector<double> ramp(1000);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = static_cast<double>(i);
  EXPECT_EQ(tree_sum(ramp), 499500.0);
}

}  // namespace
}  // namespace epd
