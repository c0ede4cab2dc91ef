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

#ifndef GHZTURB_QMAT_H_
#define GHZTURB_QMAT_H_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ghzturb {

using Complex = std::complex<double>;

/// Hermiticity and positivity tolerance shared by every check in the library.
inline constexpr double kHermitianTolerance = 1e-10;

/// Dense row-major complex matrix. Sized for the handful of qubits this
/// library deals with (at most 32x32), so everything is plain loops.
class ComplexMatrix {
 public:
  /// Zero matrix. Both dimensions must be positive.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major `entries`; rejects size mismatch and
  /// non-finite values.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  /// Column vector |v><v| outer product.
  static ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  bool all_finite() const;
  std::string shape_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
/// Entrywise complex conjugate in the computational basis.
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

/// Kronecker product: entry (i*b.rows+k, j*b.cols+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

/// Largest absolute elementwise difference. Shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a - a^dagger| <= tol.
bool is_hermitian(const ComplexMatrix& a, double tol = kHermitianTolerance);

/// Traces out every qubit not listed in `keep`. Qubit 0 is the leftmost
/// tensor factor (most significant bit of the basis index); the result's
/// qubits follow the order given in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep);
ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::initializer_list<int> keep);

/// Reorders tensor factors: qubit `perm[k]` of `rho` becomes qubit k of the
/// result. `perm` must be a permutation of 0..n_qubits-1.
ComplexMatrix permute_qubits(const ComplexMatrix& rho, int n_qubits, std::span<const int> perm);

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
struct HermitianEigen {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  ComplexMatrix vectors;
  /// Column index each eigenpair had when the Jacobi sweeps finished, before
  /// sorting. Gives a deterministic tie-break between degenerate eigenvalues.
  std::vector<std::size_t> jacobi_column;
};

/// Throws std::domain_error if `a` is not Hermitian within
/// kHermitianTolerance, std::runtime_error if 100 sweeps do not converge.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

/// PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero; more
/// negative ones throw std::domain_error.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& a);

/// Product of the Jacobi eigenvalues.
double hermitian_determinant(const ComplexMatrix& a);

/// General determinant by LU decomposition with partial pivoting.
Complex determinant(const ComplexMatrix& a);

}  // namespace ghzturb

#endif  // GHZTURB_QMAT_H_
