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

#include <algorithm>
#include <random>

#include "epd/errors.hpp"
#include "epd/gates.hpp"
#include "epd/group_sum.hpp"
#include "epd/network.hpp"
#include "epd/trace_terms.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

NetworkNode node(const ComplexMatrix& m, int out, int in) {
  return {m, {{out, m.rows()}}, {{in, m.cols()}}};
}

TEST(ContractNetwork, SingleLoopIsTheTrace) {
  std::mt19937_64 gen(1);
  const auto a = testing::random_square(3, gen);
  const NetworkNode nodes[] = {node(a, 0, 0)};
  EXPECT_COMPLEX_NEAR(contract_network(nodes), trace(a), 1e-12);
}

TEST(ContractNetwork, TwoNodeLoopIsTraceOfProduct) {
  std::mt19937_64 gen(2);
  const auto a = testing::random_square(4, gen), b = testing::random_square(4, gen);
  // A: in x, out y; B: in y, out x.
  const NetworkNode nodes[] = {node(a, 1, 0), node(b, 0, 1)};
  EXPECT_COMPLEX_NEAR(contract_network(nodes), trace(a * b), 1e-10);
}

TEST(ContractNetwork, RectangularChain) {
  std::mt19937_64 gen(3);
  const auto a = testing::random_matrix(2, 5, gen), b = testing::random_matrix(5, 3, gen),
             c = testing::random_matrix(3, 2, gen);
  const NetworkNode nodes[] = {node(a, 0, 1), node(b, 1, 2), node(c, 2, 0)};
  EXPECT_COMPLEX_NEAR(contract_network(nodes), trace(a * b * c), 1e-10);
}

// Tr(U⊗² V(1↔3) U†⊗² V(1↔3)) for CNOT as an 8-leg network against the dense
// 16-dimensional evaluation.
TEST(ContractNetwork, SandwichMatchesDenseForCnot) {
  const auto u = build(make_spec(GateFamily::cnot));
  const auto t13 = Permutation::transposition(4, 0, 2);
  const auto nodes = sandwich_network(u, 2, 2, t13, t13);
  const auto layout = SubsystemLayout::alternating(2, 2, 2);
  const auto v = realize(t13, layout);
  const auto uu = kron(u, u);
  const Complex dense = trace(uu * v * uu.adjoint() * v);
  EXPECT_COMPLEX_NEAR(contract_network(nodes), dense, 1e-12);
}

TEST(ContractNetwork, NodeOrderDoesNotMatter) {
  std::mt19937_64 gen(4);
  const auto u = testing::random_square(6, gen);
  const auto sigma = Permutation::parse("(13)(24)", 4);
  const auto tau = Permutation::parse("(13)", 4);
  auto nodes = sandwich_network(u, 2, 3, sigma, tau);
  const Complex reference = contract_network(nodes);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(nodes.begin(), nodes.end(), gen);
    const Complex z = contract_network(nodes);
    EXPECT_LE(std::abs(z - reference), 1e-10 * std::max(1.0, std::abs(reference)));
  }
}

TEST(ContractNetwork, StructuralErrors) {
  const auto a = ComplexMatrix::identity(2);
  const NetworkNode unmatched[] = {node(a, 0, 1)};
  EXPECT_THROW(contract_network(unmatched), NetworkError);
  const NetworkNode triple[] = {node(a, 0, 0), node(a, 0, 1), node(a, 1, 2)};
  EXPECT_THROW(contract_network(triple), NetworkError);
  const auto b = ComplexMatrix::identity(3);
  const NetworkNode mismatch[] = {node(a, 0, 1), node(b, 1, 0)};
  EXPECT_THROW(contract_network(mismatch), NetworkError);
  const NetworkNode bad_shape[] = {{a, {{0, 3}}, {{0, 3}}}};
  EXPECT_THROW(contract_network(bad_shape), NetworkError);
}

TEST(ContractNetwork, ExtendedPrecisionAgrees) {
  std::mt19937_64 gen(5);
  const auto u = testing::random_square(4, gen);
  const auto sigma = Permutation::parse("(1357)(28)", 8);
  const auto tau = Permutation::parse("(13)(57)", 8);
  const auto nodes = sandwich_network(u, 2, 2, sigma, tau);
  const Complex standard = contract_network(nodes);
  const Complex extended = contract_network(nodes, Precision::extended);
  EXPECT_LE(std::abs(standard - extended), 1e-10 * std::abs(extended));
}

TEST(Tensor, PermuteTraceAndPair) {
  // 2x3 matrix as a tensor with labels (0, 1).
  std::vector<Complex> data{1, 2, 3, 4, 5, 6};
  const Tensor t({0, 1}, {2, 3}, data);
  const std::size_t swap[] = {1, 0};
  const Tensor tt = t.permuted(swap);
  EXPECT_EQ(tt.dims(), (std::vector<std::size_t>{3, 2}));
  EXPECT_EQ(tt.data()[1], Complex(4));  // element (0, 1) of the transpose
  EXPECT_THROW(Tensor({0}, {2}, data), NetworkError);

  const Tensor square({7, 7}, {2, 2}, {1, 2, 3, 4});
  const Tensor traced = square.self_traced();
  EXPECT_EQ(traced.rank(), 0u);
  EXPECT_EQ(traced.data()[0], Complex(5));

  const Tensor v({1}, {3}, {1, 1, 1});
  const Tensor rowsums = contract_pair(t, v);
  EXPECT_EQ(rowsums.labels(), (std::vector<int>{0}));
  EXPECT_EQ(rowsums.data()[0], Complex(6));
  EXPECT_EQ(rowsums.data()[1], Complex(15));
}

}  // namespace
}  // namespace epd
