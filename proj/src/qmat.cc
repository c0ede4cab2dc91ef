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
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace ghzturb {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffDiagonalThreshold = 1e-13;

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square()) {
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " + a.shape_string());
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + ": shape mismatch " + a.shape_string() + " vs " +
                                b.shape_string());
  }
}

std::size_t qubit_dimension(int n_qubits) { return std::size_t{1} << n_qubits; }

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r != c) sum += std::norm(a(r, c));
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.entries()) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }
  if (entries_.size() != rows * cols) {
    throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  if (!all_finite()) {
    throw std::invalid_argument("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = n_rows == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(n_rows * n_cols);
  for (const auto& row : rows) {
    if (row.size() != n_cols) {
      throw std::invalid_argument("ComplexMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(n_rows, n_cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix m(ket.size(), bra.size());
  for (std::size_t r = 0; r < ket.size(); ++r) {
    for (std::size_t c = 0; c < bra.size(); ++c) {
      m(r, c) = ket[r] * std::conj(bra[c]);
    }
  }
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : entries_) z *= scale;
  return *this;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::string ComplexMatrix::shape_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: cannot multiply " + a.shape_string() + " by " + b.shape_string());
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex lhs = a(r, k);
      if (lhs == Complex{}) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += lhs * b(k, c);
    }
  }
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = std::conj(a(r, c));
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex sum{};
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  if (!a.is_square()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = r; c < a.cols(); ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::span<const int> keep) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw std::invalid_argument("partial_trace: n_qubits must be in [1, 5]");
  }
  const std::size_t dim = qubit_dimension(n_qubits);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                                " matrix, got " + rho.shape_string());
  }
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep must be nonempty");
  }
  std::vector<bool> kept(n_qubits, false);
  for (int q : keep) {
    if (q < 0 || q >= n_qubits) {
      throw std::invalid_argument("partial_trace: qubit index " + std::to_string(q) + " out of range");
    }
    if (kept[q]) {
      throw std::invalid_argument("partial_trace: qubit index " + std::to_string(q) + " repeated");
    }
    kept[q] = true;
  }
  std::vector<int> traced;
  for (int q = 0; q < n_qubits; ++q) {
    if (!kept[q]) traced.push_back(q);
  }

  const int n_keep = static_cast<int>(keep.size());
  const int n_traced = static_cast<int>(traced.size());
  // Full basis index from the kept-register index and traced-register index.
  auto full_index = [&](std::size_t kept_index, std::size_t traced_index) {
    std::size_t index = 0;
    for (int k = 0; k < n_keep; ++k) {
      const std::size_t bit = (kept_index >> (n_keep - 1 - k)) & 1u;
      index |= bit << (n_qubits - 1 - keep[k]);
    }
    for (int t = 0; t < n_traced; ++t) {
      const std::size_t bit = (traced_index >> (n_traced - 1 - t)) & 1u;
      index |= bit << (n_qubits - 1 - traced[t]);
    }
    return index;
  };

  const std::size_t out_dim = qubit_dimension(n_keep);
  const std::size_t env_dim = qubit_dimension(n_traced);
  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t r = 0; r < out_dim; ++r) {
    for (std::size_t c = 0; c < out_dim; ++c) {
      Complex sum{};
      for (std::size_t e = 0; e < env_dim; ++e) sum += rho(full_index(r, e), full_index(c, e));
      out(r, c) = sum;
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int n_qubits, std::initializer_list<int> keep) {
  return partial_trace(rho, n_qubits, std::span<const int>(keep.begin(), keep.size()));
}

ComplexMatrix permute_qubits(const ComplexMatrix& rho, int n_qubits, std::span<const int> perm) {
  const std::size_t dim = qubit_dimension(n_qubits);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("permute_qubits: expected " + std::to_string(dim) + "x" + std::to_string(dim) +
                                " matrix, got " + rho.shape_string());
  }
  std::vector<int> sorted(perm.begin(), perm.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(n_qubits);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) {
    throw std::invalid_argument("permute_qubits: not a permutation of the qubit indices");
  }
  auto source_index = [&](std::size_t index) {
    std::size_t source = 0;
    for (int k = 0; k < n_qubits; ++k) {
      const std::size_t bit = (index >> (n_qubits - 1 - k)) & 1u;
      source |= bit << (n_qubits - 1 - perm[k]);
    }
    return source;
  };
  ComplexMatrix out(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) out(r, c) = rho(source_index(r), source_index(c));
  }
  return out;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& input) {
  require_square(input, "hermitian_eigen");
  if (!is_hermitian(input)) {
    throw std::domain_error("hermitian_eigen: matrix is not Hermitian within tolerance");
  }
  const std::size_t n = input.rows();
  // Work on the exactly Hermitian part.
  ComplexMatrix a = 0.5 * (input + dagger(input));
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = kJacobiOffDiagonalThreshold * std::max(1.0, frobenius_norm(a));

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double r = std::abs(g);
        if (r == 0.0) continue;
        const Complex phase = g / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rotation G acting on the (p, q) plane; A <- G^dagger A G.
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * std::conj(phase);
        const Complex g_qq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) {
    throw std::runtime_error("hermitian_eigen: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen result{{}, ComplexMatrix(n, n), order};
  result.values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values.push_back(a(order[k], order[k]).real());
    for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = v(r, order[k]);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) { return hermitian_eigen(a).values; }

ComplexMatrix hermitian_sqrt(const ComplexMatrix& a) {
  const HermitianEigen eig = hermitian_eigen(a);
  const std::size_t n = a.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.values[k];
    if (lambda < -kHermitianTolerance) {
      throw std::domain_error("hermitian_sqrt: eigenvalue " + std::to_string(lambda) + " is negative");
    }
    const double root = std::sqrt(std::max(lambda, 0.0));
    if (root == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = root * eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return out;
}

double hermitian_determinant(const ComplexMatrix& a) {
  const std::vector<double> values = hermitian_eigenvalues(a);
  return std::accumulate(values.begin(), values.end(), 1.0, std::multiplies<>());
}

Complex determinant(const ComplexMatrix& input) {
  require_square(input, "determinant");
  ComplexMatrix lu = input;
  const std::size_t n = lu.rows();
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / lu(col, col);
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

}  // namespace ghzturb
