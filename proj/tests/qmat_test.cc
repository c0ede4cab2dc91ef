// Copyright 2026 The ghzturb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzturb/qmat.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "ghzturb/states.h"
#include "gtest/gtest.h"

using namespace ghzturb;

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix sigma_y() { return ComplexMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}); }

ComplexMatrix hyperbolic(double t) {
  return ComplexMatrix::from_rows({{std::cosh(t), std::sinh(t)}, {std::sinh(t), std::cosh(t)}});
}

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gaussian;
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Complex(gaussian(rng), gaussian(rng));
  }
  return m;
}

ComplexMatrix random_psd(std::size_t n, std::mt19937_64& rng) {
  const ComplexMatrix g = random_matrix(n, n, rng);
  return matmul(g, dagger(g));
}

ComplexMatrix ghz_projector() { return to_density(ghz_state()).matrix(); }

}  // namespace

TEST(qmat, RejectsBadShapesAndNonFiniteEntries) {
  EXPECT_THROW(ComplexMatrix(0, 2), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}),
               std::invalid_argument);
  EXPECT_THROW(ComplexMatrix(1, 1, {Complex(0.0, std::numeric_limits<double>::infinity())}),
               std::invalid_argument);
}

TEST(qmat, MatmulExamples) {
  EXPECT_EQ(max_abs_diff(matmul(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(2)),
            0.0);
  EXPECT_LT(max_abs_diff(matmul(sigma_y(), sigma_y()), ComplexMatrix::identity(2)), 1e-15);
  EXPECT_LT(max_abs_diff(matmul(hyperbolic(0.7), hyperbolic(-0.7)), ComplexMatrix::identity(2)), 1e-14);
}

TEST(qmat, MatmulDimensionMismatchNamesBothShapes) {
  try {
    matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3));
    FAIL() << "expected throw";
  } catch (const std::invalid_argument& e) {
    const std::string message = e.what();
    EXPECT_NE(message.find("2x3"), std::string::npos);
    EXPECT_NE(message.find("by 2x3"), std::string::npos);
  }
}

TEST(qmat, Dagger) {
  EXPECT_EQ(max_abs_diff(dagger(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)), 0.0);
  EXPECT_EQ(max_abs_diff(dagger(sigma_y()), sigma_y()), 0.0);
  const ComplexMatrix raising = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  EXPECT_EQ(max_abs_diff(dagger(raising), ComplexMatrix::from_rows({{0.0, 0.0}, {1.0, 0.0}})), 0.0);
}

TEST(qmat, Kron) {
  EXPECT_EQ(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4)),
            0.0);
  const ComplexMatrix expected =
      ComplexMatrix::from_rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
  EXPECT_LT(max_abs_diff(kron(sigma_y(), sigma_y()), expected), 1e-15);
  EXPECT_EQ(max_abs_diff(kron(hyperbolic(0.0), hyperbolic(0.0)), ComplexMatrix::identity(4)), 0.0);
}

TEST(qmat, KronIndexConvention) {
  const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{5.0, 6.0, 7.0}});
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 2u);
  ASSERT_EQ(k.cols(), 6u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(k(i, j * 3 + l), a(i, j) * b(0, l));
    }
  }
}

TEST(qmat, Trace) {
  EXPECT_EQ(trace(ComplexMatrix::identity(8)), Complex(8.0));
  EXPECT_NEAR(std::abs(trace(ghz_projector()) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(trace(sigma_y()), Complex(0.0));
  EXPECT_THROW(trace(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST(qmat, PartialTraceExamples) {
  const ComplexMatrix rho_a = ComplexMatrix::from_rows({{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}});
  const ComplexMatrix rho_b = ComplexMatrix::from_rows({{0.4, 0.25}, {0.25, 0.6}});
  EXPECT_LT(max_abs_diff(partial_trace(kron(rho_a, rho_b), 2, {0}), rho_a), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(kron(rho_a, rho_b), 2, {1}), rho_b), 1e-15);

  EXPECT_LT(max_abs_diff(partial_trace(ghz_projector(), 3, {0}), 0.5 * ComplexMatrix::identity(2)), 1e-15);

  ComplexMatrix pair(4, 4);
  pair(0, 0) = 0.5;
  pair(3, 3) = 0.5;
  EXPECT_LT(max_abs_diff(partial_trace(ghz_projector(), 3, {0, 1}), pair), 1e-15);
}

TEST(qmat, PartialTraceKeepOrderReordersQubits) {
  const ComplexMatrix zero = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
  const ComplexMatrix one = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  const ComplexMatrix plus = ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  const ComplexMatrix product = kron(kron(zero, one), plus);
  EXPECT_LT(max_abs_diff(partial_trace(product, 3, {2, 0}), kron(plus, zero)), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(product, 3, {1, 2}), kron(one, plus)), 1e-15);
}

TEST(qmat, PartialTraceErrors) {
  const ComplexMatrix rho = ghz_projector();
  EXPECT_THROW(partial_trace(rho, 3, {3}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, 3, {-1}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, 3, {0, 0}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, 2, {0}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, 3, std::span<const int>{}), std::invalid_argument);
}

TEST(qmat, PermuteQubitsSwapsFactors) {
  const ComplexMatrix a = ComplexMatrix::from_rows({{0.7, 0.1}, {0.1, 0.3}});
  const ComplexMatrix b = ComplexMatrix::from_rows({{0.2, Complex(0, 0.1)}, {Complex(0, -0.1), 0.8}});
  const ComplexMatrix c = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}});
  const std::array<int, 3> perm = {2, 0, 1};
  EXPECT_LT(max_abs_diff(permute_qubits(kron(kron(a, b), c), 3, perm), kron(kron(c, a), b)), 1e-15);
  const std::array<int, 3> bad = {0, 0, 1};
  EXPECT_THROW(permute_qubits(kron(kron(a, b), c), 3, bad), std::invalid_argument);
}

TEST(qmat, HermitianEigenvaluesExamples) {
  EXPECT_EQ(hermitian_eigenvalues(ComplexMatrix::identity(4)), (std::vector<double>{1, 1, 1, 1}));

  const std::vector<double> pauli = hermitian_eigenvalues(sigma_y());
  ASSERT_EQ(pauli.size(), 2u);
  EXPECT_NEAR(pauli[0], -1.0, 1e-14);
  EXPECT_NEAR(pauli[1], 1.0, 1e-14);

  const std::vector<double> projector = hermitian_eigenvalues(ghz_projector());
  for (std::size_t k = 0; k < 7; ++k) EXPECT_NEAR(projector[k], 0.0, 1e-14);
  EXPECT_NEAR(projector[7], 1.0, 1e-14);
}

TEST(qmat, HermitianEigenvectorsDiagonalize) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix g = random_matrix(6, 6, rng);
    const ComplexMatrix h = 0.5 * (g + dagger(g));
    const HermitianEigen eig = hermitian_eigen(h);
    ComplexMatrix diag(6, 6);
    for (std::size_t k = 0; k < 6; ++k) diag(k, k) = eig.values[k];
    EXPECT_LT(max_abs_diff(matmul(matmul(eig.vectors, diag), dagger(eig.vectors)), h), 1e-12);
    EXPECT_LT(max_abs_diff(matmul(dagger(eig.vectors), eig.vectors), ComplexMatrix::identity(6)), 1e-12);
    EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
  }
}

TEST(qmat, HermitianEigenRejectsNonHermitian) {
  const ComplexMatrix skew = ComplexMatrix::from_rows({{1.0, 1.0}, {0.0, 1.0}});
  EXPECT_THROW(hermitian_eigenvalues(skew), std::domain_error);
  // Within tolerance is accepted.
  const ComplexMatrix nearly = ComplexMatrix::from_rows({{1.0, 0.5}, {0.5 + 1e-12, 1.0}});
  EXPECT_NO_THROW(hermitian_eigenvalues(nearly));
}

TEST(qmat, HermitianSqrtExamples) {
  EXPECT_LT(max_abs_diff(hermitian_sqrt(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)), 1e-14);
  EXPECT_LT(max_abs_diff(hermitian_sqrt(4.0 * ComplexMatrix::identity(2)), 2.0 * ComplexMatrix::identity(2)), 1e-14);
  EXPECT_LT(max_abs_diff(hermitian_sqrt(ghz_projector()), ghz_projector()), 1e-14);
}

TEST(qmat, HermitianSqrtRejectsNegativeSpectrum) {
  EXPECT_THROW(hermitian_sqrt(-1.0 * ComplexMatrix::identity(2)), std::domain_error);
  // Tiny negative eigenvalues are clamped.
  ComplexMatrix almost(2, 2);
  almost(0, 0) = 1.0;
  almost(1, 1) = -5e-11;
  const ComplexMatrix root = hermitian_sqrt(almost);
  EXPECT_NEAR(root(0, 0).real(), 1.0, 1e-15);
  EXPECT_EQ(root(1, 1), Complex(0.0));
}

TEST(qmat, DeterminantByLu) {
  const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 2.0, 1.0}, {1.0, 1.0, 0.0}, {3.0, 0.0, 1.0}});
  // Cofactor expansion: 0*(1) - 2*(1 - 0) + 1*(0 - 3) = -5.
  EXPECT_NEAR(std::abs(determinant(m) - Complex(-5.0)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(determinant(hyperbolic(1.3)) - Complex(1.0)), 0.0, 1e-13);
}

// Property checks on seeded random inputs.

TEST(qmat_properties, KronIsAssociative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(2, 2, rng);
    const ComplexMatrix c = random_matrix(2, 2, rng);
    EXPECT_LT(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))), 1e-12);
  }
}

TEST(qmat_properties, TraceIsCyclic) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix a = random_matrix(n, n, rng);
    const ComplexMatrix b = random_matrix(n, n, rng);
    EXPECT_LT(std::abs(trace(matmul(a, b)) - trace(matmul(b, a))), 1e-12);
  }
}

TEST(qmat_properties, PartialTracePreservesTrace) {
  std::mt19937_64 rng(13);
  const std::vector<std::vector<int>> keeps = {{0}, {1}, {2}, {0, 1}, {2, 0}, {1, 2}, {0, 1, 2}};
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix rho = random_psd(8, rng);
    for (const auto& keep : keeps) {
      EXPECT_LT(std::abs(trace(partial_trace(rho, 3, keep)) - trace(rho)), 1e-12);
    }
  }
}

TEST(qmat_properties, PartialTraceOfKronRecoversScaledFactor) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix a = random_matrix(2, 2, rng);
    const ComplexMatrix b = random_matrix(4, 4, rng);
    EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), 3, {0}), trace(b) * a), 1e-12);
    EXPECT_LT(max_abs_diff(partial_trace(kron(a, b), 3, {1, 2}), trace(a) * b), 1e-12);
  }
}

TEST(qmat_properties, EigenvaluesMatchTraceAndDeterminant) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix g = random_matrix(n, n, rng);
    const ComplexMatrix h = 0.5 * (g + dagger(g));
    const std::vector<double> values = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double v : values) sum += v;
    EXPECT_LT(std::abs(sum - trace(h).real()), 1e-10);
    EXPECT_LT(std::abs(hermitian_determinant(h) - determinant(h)), 1e-9 * std::max(1.0, std::abs(determinant(h))));
  }
}

TEST(qmat_properties, SqrtSquaresBack) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const ComplexMatrix a = random_psd(n, rng);
    const ComplexMatrix root = hermitian_sqrt(a);
    EXPECT_TRUE(is_hermitian(root, 1e-12));
    EXPECT_LT(max_abs_diff(matmul(root, root), a), 1e-9);
    EXPECT_GE(hermitian_eigenvalues(root).front(), -1e-10);
  }
}
