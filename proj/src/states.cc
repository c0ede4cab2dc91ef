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

#include "ghzturb/states.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace ghzturb {

namespace {

constexpr int kMaxQubits = 5;

void require_qubit_count(int n_qubits, const char* what) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(std::string(what) + ": n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n_qubits));
  }
}

double l2_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  require_qubit_count(n_qubits, "PureState");
  if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument("PureState: expected " + std::to_string(std::size_t{1} << n_qubits) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  const double n = norm();
  if (!std::isfinite(n) || std::abs(n - 1.0) > kHermitianTolerance) {
    throw std::invalid_argument("PureState: amplitude vector is not unit norm (norm " + std::to_string(n) + ")");
  }
}

PureState PureState::normalized(int n_qubits, std::vector<Complex> amplitudes) {
  const double n = l2_norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("PureState::normalized: cannot normalize a zero or non-finite vector");
  }
  for (Complex& z : amplitudes) z /= n;
  return PureState(n_qubits, std::move(amplitudes));
}

double PureState::norm() const { return l2_norm(amplitudes_); }

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix) : DensityMatrix(n_qubits, std::move(matrix), true) {}

DensityMatrix DensityMatrix::unnormalized(int n_qubits, ComplexMatrix matrix) {
  return DensityMatrix(n_qubits, std::move(matrix), false);
}

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix matrix, bool normalized)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)), normalized_(normalized) {
  require_qubit_count(n_qubits, "DensityMatrix");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw std::invalid_argument("DensityMatrix: " + std::to_string(n_qubits) + " qubits need a " +
                                std::to_string(dim) + "x" + std::to_string(dim) + " matrix, got " +
                                matrix_.shape_string());
  }
  if (!matrix_.all_finite()) {
    throw std::invalid_argument("DensityMatrix: non-finite entry");
  }
  if (!normalized_) return;
  if (!is_hermitian(matrix_)) {
    throw std::domain_error("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - 1.0) > kHermitianTolerance) {
    throw std::domain_error("DensityMatrix: trace " + std::to_string(tr.real()) + " is not 1");
  }
  const std::vector<double> spectrum = hermitian_eigenvalues(matrix_);
  if (spectrum.front() < -kHermitianTolerance) {
    throw std::domain_error("DensityMatrix: negative eigenvalue " + std::to_string(spectrum.front()));
  }
}

PureState basis_state(int n_qubits, std::size_t index) {
  require_qubit_count(n_qubits, "basis_state");
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw std::invalid_argument("basis_state: index " + std::to_string(index) + " out of range");
  }
  std::vector<Complex> amplitudes(dim);
  amplitudes[index] = 1.0;
  return PureState(n_qubits, std::move(amplitudes));
}

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

PureState ghz_state() {
  std::vector<Complex> amplitudes(8);
  amplitudes[0b000] = kInvSqrt2;
  amplitudes[0b111] = kInvSqrt2;
  return PureState(3, std::move(amplitudes));
}

PureState bell_state() {
  std::vector<Complex> amplitudes(4);
  amplitudes[0b00] = kInvSqrt2;
  amplitudes[0b11] = kInvSqrt2;
  return PureState(2, std::move(amplitudes));
}

PureState w_state() {
  std::vector<Complex> amplitudes(8);
  amplitudes[0b001] = std::numbers::inv_sqrt3;
  amplitudes[0b010] = std::numbers::inv_sqrt3;
  amplitudes[0b100] = std::numbers::inv_sqrt3;
  return PureState(3, std::move(amplitudes));
}

DensityMatrix to_density(const PureState& psi) {
  return DensityMatrix(psi.n_qubits(), ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

PureState haar_random_state(int n_qubits, std::mt19937_64& rng) {
  require_qubit_count(n_qubits, "haar_random_state");
  std::normal_distribution<double> gaussian(0.0, 1.0);
  std::vector<Complex> amplitudes(std::size_t{1} << n_qubits);
  for (Complex& z : amplitudes) {
    const double re = gaussian(rng);
    const double im = gaussian(rng);
    z = Complex(re, im);
  }
  return PureState::normalized(n_qubits, std::move(amplitudes));
}

DensityMatrix werner_state(double p, int n_qubits) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner_state: p must lie in [0, 1], got " + std::to_string(p));
  }
  if (n_qubits != 2 && n_qubits != 3) {
    throw std::invalid_argument("werner_state: only 2 or 3 qubits are supported, got " + std::to_string(n_qubits));
  }
  const PureState reference = n_qubits == 2 ? bell_state() : ghz_state();
  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix rho = p * ComplexMatrix::outer(reference.amplitudes(), reference.amplitudes());
  const double noise = (1.0 - p) / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) rho(i, i) += noise;
  return DensityMatrix(n_qubits, std::move(rho));
}

}  // namespace ghzturb
