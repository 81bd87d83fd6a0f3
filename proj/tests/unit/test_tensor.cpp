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
#include <filesystem>
#include <fstream>
#include <random>

#include "epd/errors.hpp"
#include "epd/matrix_io.hpp"
#include "epd/tensor.hpp"
#include "test_support.hpp"

namespace epd {
namespace {

using testing::hadamard;
using testing::pauli_x;

ComplexMatrix ket(std::size_t dim, std::size_t index) {
  ComplexMatrix v(dim, 1);
  v(index, 0) = 1.0;
  return v;
}

TEST(ComplexMatrix, ShapeAndEntries) {
  ComplexMatrix m(2, 3);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.size(), 6u);
  EXPECT_FALSE(m.is_square());
  m(1, 2) = {1.0, -2.0};
  EXPECT_EQ(m.entries()[5], Complex(1.0, -2.0));
  EXPECT_THROW(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
  EXPECT_THROW(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST(ComplexMatrix, AdjointAndProducts) {
  std::mt19937_64 gen(1);
  const auto a = testing::random_matrix(2, 3, gen);
  const auto b = testing::random_matrix(3, 4, gen);
  EXPECT_MATRIX_NEAR((a * b).adjoint(), b.adjoint() * a.adjoint(), 1e-12);
  EXPECT_EQ(a.transpose().rows(), 3u);
  EXPECT_THROW(a * a, DimensionError);
  EXPECT_THROW(max_abs_diff(a, b), DimensionError);
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_MATRIX_NEAR(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4), 0.0);
}

TEST(Kron, XXFlipsBothQubits) {
  const auto out = kron(pauli_x(), pauli_x()) * ket(4, 0);
  EXPECT_MATRIX_NEAR(out, ket(4, 3), 0.0);
}

TEST(Kron, HadamardOnLeadingQubit) {
  const auto out = kron(hadamard(), ComplexMatrix::identity(2)) * ket(4, 0);
  ComplexMatrix expected(4, 1);
  expected(0, 0) = expected(2, 0) = 1.0 / std::sqrt(2.0);
  EXPECT_MATRIX_NEAR(out, expected, 1e-15);
}

TEST(Kron, TraceFactorizes) {
  std::mt19937_64 gen(2);
  for (int i = 0; i < 20; ++i) {
    const auto a = testing::random_square(2 + i % 2, gen);
    const auto b = testing::random_square(3, gen);
    EXPECT_COMPLEX_NEAR(trace(kron(a, b)), trace(a) * trace(b), 1e-10);
  }
}

TEST(Kron, MixedProductRule) {
  std::mt19937_64 gen(3);
  const auto a = testing::random_square(2, gen), b = testing::random_square(2, gen);
  const auto c = testing::random_square(3, gen), d = testing::random_square(3, gen);
  EXPECT_MATRIX_NEAR(kron(a * b, c * d), kron(a, c) * kron(b, d), 1e-10);
}

TEST(Kron, PowerMatchesRepeatedKron) {
  const auto h = hadamard();
  EXPECT_MATRIX_NEAR(kron_power(h, 3), kron(kron(h, h), h), 1e-15);
  EXPECT_MATRIX_NEAR(kron_power(h, 0), ComplexMatrix::identity(1), 0.0);
}

TEST(SubsystemLayout, MixedRadixMostSignificantFirst) {
  const SubsystemLayout layout{2, 3, 4};
  EXPECT_EQ(layout.total(), 24u);
  EXPECT_EQ(layout.stride(0), 12u);
  EXPECT_EQ(layout.stride(2), 1u);
  const std::vector<std::size_t> digits{1, 2, 3};
  EXPECT_EQ(layout.index(digits), 23u);
  EXPECT_EQ(layout.digits(23), digits);
  EXPECT_THROW(SubsystemLayout({2, 0}), DimensionError);
}

TEST(SubsystemLayout, AlternatingPlacesFirstDimensionOnEvenSlots) {
  const auto layout = SubsystemLayout::alternating(2, 3, 2);
  EXPECT_EQ(layout.dims(), (std::vector<std::size_t>{2, 3, 2, 3}));
  EXPECT_EQ(SubsystemLayout::uniform(3, 2).dims(), (std::vector<std::size_t>{3, 3}));
}

TEST(PureState, RejectsUnnormalizedAmplitudes) {
  EXPECT_THROW(PureState(SubsystemLayout{2}, {1.0, 1.0}), DomainError);
  EXPECT_THROW(PureState(SubsystemLayout{2}, {1.0}), DimensionError);
  const auto s = PureState::normalized(SubsystemLayout{2}, {1.0, 1.0});
  EXPECT_NEAR(std::abs(s.amplitudes()[0]), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(PureState::normalized(SubsystemLayout{2}, {0.0, 0.0}), DomainError);
}

TEST(PureState, ProductAndEvolution) {
  const auto zero = PureState::basis(SubsystemLayout{2}, 0);
  const auto one = PureState::basis(SubsystemLayout{2}, 1);
  const auto s = product_state(zero, one);
  EXPECT_EQ(s.layout().dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(s.amplitudes()[1], Complex(1.0));
  const auto flipped = s.evolve(kron(pauli_x(), pauli_x()));
  EXPECT_EQ(flipped.amplitudes()[2], Complex(1.0));
  EXPECT_NEAR(trace(s.density()).real(), 1.0, 1e-15);
}

TEST(PartialTrace, ProductStateKeepsItsFactor) {
  const SubsystemLayout layout{2, 2};
  const auto rho = PureState::basis(layout, 0).density();
  const std::size_t keep[] = {1};
  const auto reduced = partial_trace(rho, layout, keep);
  EXPECT_MATRIX_NEAR(reduced, ket(2, 0) * ket(2, 0).adjoint(), 0.0);
}

TEST(PartialTrace, BellStateIsMaximallyMixed) {
  const SubsystemLayout layout{2, 2};
  const double s = 1.0 / std::sqrt(2.0);
  const PureState bell(layout, {s, 0.0, 0.0, s});
  const std::size_t keep[] = {1};
  EXPECT_MATRIX_NEAR(partial_trace(bell.density(), layout, keep), ComplexMatrix::identity(2) * 0.5, 1e-15);
}

TEST(PartialTrace, PreservesTraceAndMatchesFactors) {
  std::mt19937_64 gen(4);
  const SubsystemLayout layout{2, 3};
  const auto rho = testing::random_density(6, gen);
  const std::size_t keep_second[] = {1};
  const std::size_t keep_first[] = {0};
  EXPECT_COMPLEX_NEAR(trace(partial_trace(rho, layout, keep_second)), trace(rho), 1e-12);
  EXPECT_COMPLEX_NEAR(trace(partial_trace(rho, layout, keep_first)), trace(rho), 1e-12);

  const auto a = testing::random_density(2, gen), b = testing::random_density(3, gen);
  EXPECT_MATRIX_NEAR(partial_trace(kron(a, b), layout, keep_first), a, 1e-12);
  EXPECT_MATRIX_NEAR(partial_trace(kron(a, b), layout, keep_second), b, 1e-12);
}

TEST(PartialTrace, EverythingTracedGivesTheTrace) {
  std::mt19937_64 gen(5);
  const SubsystemLayout layout{2, 2, 3};
  const auto m = testing::random_square(12, gen);
  const auto scalar = partial_trace(m, layout, {});
  ASSERT_EQ(scalar.rows(), 1u);
  EXPECT_COMPLEX_NEAR(scalar(0, 0), trace(m), 1e-10);
}

TEST(PartialTrace, KeepsSubsystemsInAscendingOrder) {
  std::mt19937_64 gen(6);
  const SubsystemLayout layout{2, 3, 2};
  const auto a = testing::random_density(2, gen), b = testing::random_density(3, gen), c = testing::random_density(2, gen);
  const std::size_t keep[] = {2, 0};
  EXPECT_MATRIX_NEAR(partial_trace(kron(kron(a, b), c), layout, keep), kron(a, c), 1e-12);
}

TEST(PartialTrace, Errors) {
  const SubsystemLayout layout{2, 2};
  const std::size_t out_of_range[] = {2};
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), layout, out_of_range), DimensionError);
  const std::size_t keep[] = {0};
  EXPECT_THROW(partial_trace(ComplexMatrix::identity(3), layout, keep), DimensionError);
}

TEST(TensorPower, ApplyMatchesExplicitKron) {
  std::mt19937_64 gen(7);
  const auto u = testing::random_square(2, gen);
  const auto a = testing::random_matrix(8, 3, gen);
  EXPECT_MATRIX_NEAR(apply_tensor_power(u, a, 3), kron_power(u, 3) * a, 1e-10);
  const auto sq = testing::random_square(9, gen);
  const auto v = testing::random_square(3, gen);
  EXPECT_MATRIX_NEAR(conjugate_tensor_power(v, sq, 2), kron_power(v, 2) * sq * kron_power(v, 2).adjoint(), 1e-9);
  EXPECT_THROW(apply_tensor_power(u, testing::random_matrix(6, 1, gen), 3), DimensionError);
}

TEST(Unitarity, DefectAndHermiticity) {
  EXPECT_TRUE(is_unitary(hadamard()));
  EXPECT_FALSE(is_unitary(hadamard() * 1.001));
  EXPECT_NEAR(unitarity_defect(ComplexMatrix::identity(3) * 2.0), 3.0, 1e-15);
  EXPECT_TRUE(is_hermitian(pauli_x()));
  EXPECT_FALSE(is_hermitian(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})));
  EXPECT_MATRIX_NEAR(commutator(pauli_x(), pauli_x()), ComplexMatrix::zeros(2, 2), 0.0);
}

TEST(MatrixIo, ParsesRealAndComplexEntries) {
  const auto op = parse_matrix_json(R"({"dims": [2, 1], "re": [[0, 1], [1, 0]], "im": [[0, 0.5], [0, 0]]})");
  EXPECT_EQ(op.layout.dims(), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(op.matrix(0, 1), Complex(1.0, 0.5));
  const auto real = parse_matrix_json(R"({"dims": [1, 2], "re": [[1, 0], [0, 1]]})");
  EXPECT_EQ(real.matrix(1, 1), Complex(1.0));
}

TEST(MatrixIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_matrix_json("not json"), FormatError);
  EXPECT_THROW(parse_matrix_json(R"({"re": [[1, 0], [0, 1]]})"), FormatError);                      // no dims
  EXPECT_THROW(parse_matrix_json(R"({"dims": [3, 1], "re": [[1, 0], [0, 1]]})"), FormatError);       // product
  EXPECT_THROW(parse_matrix_json(R"({"dims": [2, 1], "re": [[1, 0], [0]]})"), FormatError);          // ragged
  EXPECT_THROW(parse_matrix_json(R"({"dims": [2, 1], "re": [[1, 0]]})"), FormatError);               // shape
  EXPECT_THROW(parse_matrix_json(R"({"dims": [2, 1], "re": [[1, 0], [0, 1]], "im": [[0]]})"), FormatError);
  EXPECT_THROW(parse_matrix_json(R"({"dims": [2], "re": [[1, 0], [0, 1]]})"), FormatError);
  EXPECT_THROW(read_matrix_file("/nonexistent/matrix.json"), FormatError);
}

TEST(MatrixIo, RoundTripsThroughText) {
  std::mt19937_64 gen(8);
  const auto m = testing::random_square(6, gen);
  const auto back = parse_matrix_json(to_matrix_json(m, 2, 3));
  EXPECT_EQ(back.layout.dims(), (std::vector<std::size_t>{2, 3}));
  EXPECT_MATRIX_NEAR(back.matrix, m, 0.0);

  const auto path = std::filesystem::temp_directory_path() / "epd_matrix_io_test.json";
  std::ofstream(path) << to_matrix_json(m, 3, 2);
  EXPECT_MATRIX_NEAR(read_matrix_file(path).matrix, m, 0.0);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace epd
