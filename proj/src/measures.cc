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

#include "ghzturb/measures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghzturb {

namespace {

constexpr double kVanishingTrace = 1e-300;
constexpr double kDegenerateEigenvalue = 1e-12;

void require_qubits(const DensityMatrix& rho, int n, const char* what) {
  if (rho.n_qubits() != n) {
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(n) + "-qubit state, got " +
                                std::to_string(rho.n_qubits()));
  }
}

void require_qubits(const PureState& psi, int n, const char* what) {
  if (psi.n_qubits() != n) {
    throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(n) + "-qubit state, got " +
                                std::to_string(psi.n_qubits()));
  }
}

ComplexMatrix spin_flip() {
  const ComplexMatrix sigma_y = ComplexMatrix::from_rows({{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}});
  return kron(sigma_y, sigma_y);
}

}  // namespace

double purity(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  Complex value = trace(matmul(m, m));
  if (!rho.normalized()) {
    const Complex tr = trace(m);
    if (std::abs(tr) < kVanishingTrace) {
      throw std::domain_error("purity: unnormalized state has vanishing trace");
    }
    value /= tr * tr;
  }
  if (std::abs(value.imag()) >= kHermitianTolerance) {
    throw std::domain_error("purity: Tr(rho^2) has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

double linear_entropy(const DensityMatrix& rho) { return 4.0 / 3.0 * (1.0 - purity(rho)); }

double linear_entropy_generalized(const DensityMatrix& rho) {
  const double dim = static_cast<double>(rho.matrix().rows());
  return dim / (dim - 1.0) * (1.0 - purity(rho));
}

double concurrence(const DensityMatrix& rho) {
  require_qubits(rho, 2, "concurrence");
  if (!rho.normalized()) {
    throw std::invalid_argument("concurrence: input must be a normalized density matrix");
  }
  // With W = sqrt(rho), X = W^T (sy x sy) W satisfies X^dagger X = W rho~ W,
  // so the Wootters lambdas are the singular values of X. They are read off
  // the Hermitian dilation [[0, X], [X^dagger, 0]] whose spectrum is +-lambda.
  const ComplexMatrix root = hermitian_sqrt(rho.matrix());
  const ComplexMatrix x = matmul(matmul(transpose(root), spin_flip()), root);
  const ComplexMatrix x_dagger = dagger(x);
  ComplexMatrix dilation(8, 8);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      dilation(r, c + 4) = x(r, c);
      dilation(r + 4, c) = x_dagger(r, c);
    }
  }
  std::vector<double> lambdas = hermitian_eigenvalues(dilation);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  const double c = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  return std::max(c, 0.0);
}

double tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

double three_tangle(const PureState& psi) {
  require_qubits(psi, 3, "three_tangle");
  auto a = [&](int i, int j, int k) { return psi.amplitude(static_cast<std::size_t>(i * 4 + j * 2 + k)); };
  const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                     a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                     a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                     a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
  const Complex d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                     a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                     a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                     a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double residual_tangle(const PureState& psi, int pivot) {
  require_qubits(psi, 3, "residual_tangle");
  const ComplexMatrix rho = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes());
  const ComplexMatrix single = partial_trace(rho, 3, {pivot});
  return 4.0 * determinant(single).real();
}

DensityMatrix reduced_state(const DensityMatrix& rho, std::initializer_list<int> keep) {
  ComplexMatrix reduced = partial_trace(rho.matrix(), rho.n_qubits(), keep);
  return DensityMatrix(static_cast<int>(keep.size()), std::move(reduced));
}

MeasureReport monogamy_report(const PureState& psi) {
  require_qubits(psi, 3, "monogamy_report");
  const DensityMatrix rho = to_density(psi);
  MeasureReport report;
  report.purity = purity(rho);
  report.linear_entropy = linear_entropy(rho);
  report.linear_entropy_generalized = linear_entropy_generalized(rho);
  report.tangle_ab = tangle(reduced_state(rho, {0, 1}));
  report.tangle_ac = tangle(reduced_state(rho, {0, 2}));
  report.tangle_bc = tangle(reduced_state(rho, {1, 2}));
  report.three_tangle = three_tangle(psi);
  report.residual_tangle = residual_tangle(psi, 0);
  report.monogamy_gap = report.residual_tangle - (report.tangle_ab + report.tangle_ac + report.three_tangle);
  return report;
}

double mixed_three_tangle_estimate(const DensityMatrix& rho) {
  require_qubits(rho, 3, "mixed_three_tangle_estimate");
  if (!rho.normalized()) {
    throw std::invalid_argument("mixed_three_tangle_estimate: input must be a normalized density matrix");
  }
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const std::size_t n = eig.values.size();
  const double largest = eig.values.back();
  std::size_t chosen = n - 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.values[k] >= largest - kDegenerateEigenvalue && eig.jacobi_column[k] < eig.jacobi_column[chosen]) {
      chosen = k;
    }
  }
  std::vector<Complex> amplitudes(n);
  for (std::size_t r = 0; r < n; ++r) amplitudes[r] = eig.vectors(r, chosen);
  return three_tangle(PureState::normalized(3, std::move(amplitudes)));
}

DensityMatrix positive_part(const DensityMatrix& rho) {
  if (rho.normalized()) return rho;
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix hermitian = 0.5 * (m + dagger(m));
  const HermitianEigen eig = hermitian_eigen(hermitian);
  const std::size_t n = eig.values.size();
  ComplexMatrix kept(n, n);
  double weight = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (lambda <= 0.0) continue;
    weight += lambda;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = lambda * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) kept(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  if (!(weight > kVanishingTrace)) {
    throw std::domain_error("positive_part: operator has no positive spectrum");
  }
  kept *= 1.0 / weight;
  // Exact Hermitian symmetrization; the eigenvector sum leaves ~1e-17 skew.
  return DensityMatrix(rho.n_qubits(), 0.5 * (kept + dagger(kept)));
}

MeasureReport measure_report(const DensityMatrix& rho) {
  require_qubits(rho, 3, "measure_report");
  MeasureReport report;
  report.purity = purity(rho);
  report.linear_entropy = 4.0 / 3.0 * (1.0 - report.purity);
  report.linear_entropy_generalized = 8.0 / 7.0 * (1.0 - report.purity);

  const DensityMatrix state = positive_part(rho);
  report.tangle_ab = tangle(reduced_state(state, {0, 1}));
  report.tangle_ac = tangle(reduced_state(state, {0, 2}));
  report.tangle_bc = tangle(reduced_state(state, {1, 2}));
  report.three_tangle = mixed_three_tangle_estimate(state);
  report.residual_tangle = 4.0 * determinant(partial_trace(state.matrix(), 3, {0})).real();
  report.monogamy_gap = report.residual_tangle - (report.tangle_ab + report.tangle_ac + report.three_tangle);
  return report;
}

}  // namespace ghzturb
