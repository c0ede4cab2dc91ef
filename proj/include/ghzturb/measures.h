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

#ifndef GHZTURB_MEASURES_H_
#define GHZTURB_MEASURES_H_

#include <initializer_list>

#include "ghzturb/qmat.h"
#include "ghzturb/states.h"

namespace ghzturb {

/// Every entanglement diagnostic computed for one three-qubit state.
/// Pairwise tangles use the two-qubit reductions; `three_tangle` is exact
/// for pure states and the dominant-eigenvector estimate for mixed ones.
struct MeasureReport {
  double purity = 0.0;
  double linear_entropy = 0.0;
  double linear_entropy_generalized = 0.0;
  double tangle_ab = 0.0;
  double tangle_ac = 0.0;
  double tangle_bc = 0.0;
  double three_tangle = 0.0;
  /// tau_A(BC) = 4 det(rho_A).
  double residual_tangle = 0.0;
  /// residual_tangle - (tangle_ab + tangle_ac + three_tangle).
  double monogamy_gap = 0.0;
};

/// Tr(rho^2). Unnormalized inputs are divided by their trace first.
double purity(const DensityMatrix& rho);

/// (4/3)(1 - Tr rho^2) for every qubit count.
double linear_entropy(const DensityMatrix& rho);

/// d/(d-1) (1 - Tr rho^2); lies in [0, 1] for any dimension d.
double linear_entropy_generalized(const DensityMatrix& rho);

/// Wootters concurrence of a normalized two-qubit state.
double concurrence(const DensityMatrix& rho);
double tangle(const DensityMatrix& rho);

/// 4|d1 - 2 d2 + 4 d3| over the amplitudes a_ijk, in complex arithmetic.
double three_tangle(const PureState& psi);

/// 4 det(rho_pivot) of the single-qubit reduction of a pure state.
double residual_tangle(const PureState& psi, int pivot);

MeasureReport monogamy_report(const PureState& psi);

/// Three-tangle of the eigenvector with the largest eigenvalue. Among
/// eigenvalues within 1e-12 of the maximum the lowest Jacobi column wins.
double mixed_three_tangle_estimate(const DensityMatrix& rho);

/// Normalized reduced state on the listed qubits.
DensityMatrix reduced_state(const DensityMatrix& rho, std::initializer_list<int> keep);

/// Closest valid state to an unnormalized operator: Hermitian part with
/// negative eigenvalues dropped, rescaled to unit trace.
DensityMatrix positive_part(const DensityMatrix& rho);

/// Full report for a (possibly mixed, possibly unnormalized) three-qubit
/// state. Entropies use the matrix as given; tangle-type fields use
/// positive_part() when the input is unnormalized.
MeasureReport measure_report(const DensityMatrix& rho);

}  // namespace ghzturb

#endif  // GHZTURB_MEASURES_H_
