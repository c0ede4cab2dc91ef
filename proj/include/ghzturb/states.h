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

#ifndef GHZTURB_STATES_H_
#define GHZTURB_STATES_H_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "ghzturb/qmat.h"

namespace ghzturb {

/// Unit-norm amplitude vector over 2^n computational basis states. Basis
/// index bits are read with qubit 0 as the most significant bit, so for
/// three qubits amplitude(i*4 + j*2 + k) is the coefficient of |ijk>.
class PureState {
 public:
  /// Throws std::invalid_argument on wrong length or norm off by more than 1e-10.
  PureState(int n_qubits, std::vector<Complex> amplitudes);

  /// Rescales `amplitudes` to unit norm; rejects the zero vector.
  static PureState normalized(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& amplitude(std::size_t index) const { return amplitudes_[index]; }
  double norm() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

/// 2^n x 2^n density operator.
///
/// A normalized state is Hermitian with unit trace and no eigenvalue below
/// -1e-10. An unnormalized one (the output of the literal turbulence mode)
/// need not be Hermitian; only finiteness and dimensions are checked.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, ComplexMatrix matrix);

  static DensityMatrix unnormalized(int n_qubits, ComplexMatrix matrix);

  int n_qubits() const { return n_qubits_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool normalized() const { return normalized_; }

 private:
  DensityMatrix(int n_qubits, ComplexMatrix matrix, bool normalized);

  int n_qubits_;
  ComplexMatrix matrix_;
  bool normalized_;
};

PureState basis_state(int n_qubits, std::size_t index);
/// (|000> + |111>)/sqrt(2).
PureState ghz_state();
/// Phi+ = (|00> + |11>)/sqrt(2).
PureState bell_state();
/// (|001> + |010> + |100>)/sqrt(3).
PureState w_state();

DensityMatrix to_density(const PureState& psi);

/// Haar-distributed pure state: normalized i.i.d. complex Gaussian amplitudes.
PureState haar_random_state(int n_qubits, std::mt19937_64& rng);

/// p |phi><phi| + (1-p)/2^n I, with phi the Bell state (n=2) or GHZ (n=3).
DensityMatrix werner_state(double p, int n_qubits);

}  // namespace ghzturb

#endif  // GHZTURB_STATES_H_
