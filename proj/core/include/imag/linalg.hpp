// Copyright 2026 The imaginarity Authors
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

#ifndef IMAG_LINALG_HPP
#define IMAG_LINALG_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "imag/errors.hpp"

namespace imag {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Dimensions in this library never exceed
/// a few dozen, so everything is kept simple and value-semantic.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(cplx scale) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  cplx trace() const;
  double frobenius_norm() const;
  /// Largest entry magnitude; max over |Re| and |Im| is not used anywhere,
  /// distances are always measured entrywise in modulus.
  double max_abs() const;
  double max_abs_imag() const;

  bool is_square() const { return rows_ == cols_; }
  bool is_hermitian(double tol) const;

  /// (A + A^dagger) / 2, with the diagonal forced real.
  ComplexMatrix hermitized() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator*(cplx scale, const ComplexMatrix& m);

/// Dense row-major real matrix (orthogonal rotations, Kraus operators).
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RealMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const double& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RealMatrix transpose() const;
  RealMatrix operator*(const RealMatrix& rhs) const;
  ComplexMatrix to_complex() const;

  /// max |(M^T M - I)_{ij}|, the orthogonality residual of the columns.
  double orthogonality_residual() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors_ column k pairs with eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
///
/// Throws NotHermitianError if ||H - H^dagger||_max > 1e-8 and
/// NoConvergenceError if the off-diagonal Frobenius mass has not dropped
/// below 1e-14 within 100 sweeps. Intended for the dimensions this library
/// works at (d <= 16, matrices of order-one norm).
Spectrum eig_hermitian(const ComplexMatrix& h);

/// V g(Lambda) V^dagger for Hermitian PSD h. Eigenvalues in [-1e-8, 0) are
/// clamped to 0 before applying g; anything below -1e-8 raises NotPSDError.
ComplexMatrix func_psd(const ComplexMatrix& h, const std::function<double(double)>& g);

/// Base-2 von Neumann entropy of a density matrix.
double von_neumann_entropy(const ComplexMatrix& rho);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped into [0, 1].
double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

}  // namespace imag

#endif
