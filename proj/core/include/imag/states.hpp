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

#ifndef IMAG_STATES_HPP
#define IMAG_STATES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "imag/linalg.hpp"

namespace imag {

/// Normalized pure state in the fixed reference basis.
///
/// The constructor rejects vectors whose norm is off by more than `tol`
/// (ValidationError "unit_norm") and then renormalizes to machine precision.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes, double tol = 1e-8);

  std::size_t dim() const { return amp_.size(); }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }
  const std::vector<cplx>& amplitudes() const { return amp_; }

  ComplexMatrix projector() const;

 private:
  std::vector<cplx> amp_;
};

/// Validated density matrix: Hermitian, unit trace, eigenvalues >= -1e-9.
/// The stored matrix is hermitized and trace-rescaled after validation, so
/// downstream arithmetic can rely on exact symmetry.
class DensityMatrix {
 public:
  /// Validates at tolerance `tol` (Hermiticity and trace residuals), checks
  /// PSD at the fixed -1e-9 floor, and names the first violated invariant in
  /// the ValidationError: "shape", "hermitian", "trace_one",
  /// "positive_semidefinite".
  static DensityMatrix validated(const ComplexMatrix& m, double tol = 1e-8);
  static DensityMatrix from_pure(const PureState& psi);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Weighted pure-state ensemble. Weights are positive and sum to one.
class Ensemble {
 public:
  Ensemble(std::vector<double> weights, std::vector<PureState> states);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  const PureState& state(std::size_t i) const { return states_[i]; }

  /// Sum_i p_i |psi_i><psi_i| as a validated DensityMatrix.
  DensityMatrix mix() const;

 private:
  std::vector<double> weights_;
  std::vector<PureState> states_;
};

PureState conjugate(const PureState& psi);
DensityMatrix conjugate(const DensityMatrix& rho);

/// Splits rho into (Re rho, Im rho): a real symmetric and a real
/// antisymmetric matrix with rho = Re + i*Im.
std::pair<RealMatrix, RealMatrix> real_imag_parts(const DensityMatrix& rho);

bool is_real_state(const DensityMatrix& rho, double tol = 1e-10);

/// Block-diagonal mixture p*rho1 (+) (1-p)*rho2 on dim(rho1)+dim(rho2).
DensityMatrix direct_sum(double p, const DensityMatrix& rho1, const DensityMatrix& rho2);

/// Haar-random pure state / random density matrix of the given rank
/// (partial trace of a Haar pure state on dim x rank). Deterministic for a
/// fixed seed within one build.
PureState sample_pure(std::size_t dim, std::uint64_t seed);
DensityMatrix sample_density(std::size_t dim, std::size_t rank, std::uint64_t seed);

/// Numerical rank of rho: number of eigenvalues above 1e-10.
std::size_t numerical_rank(const DensityMatrix& rho);

/// Every size-m pure-state ensemble of rho arises from a column-orthonormal
/// mixing matrix M (m x r, r = rank of rho) applied to the eigen-ensemble:
/// |psi~_i> = sum_j M_ij sqrt(lambda_j) |v_j>, p_i = ||psi~_i||^2. Columns
/// are indexed against the positive eigenvalues of rho in descending order.
/// Branches with p_i < 1e-14 are dropped.
///
/// Throws NotIsometryError if M^dagger M deviates from I by more than 1e-8,
/// RankMismatchError if M has the wrong number of columns.
Ensemble hjw_decompositions(const DensityMatrix& rho, const ComplexMatrix& mixing);

/// Inverse direction: the mixing matrix that reproduces `ensemble` through
/// hjw_decompositions (up to dropped zero-weight branches). The ensemble must
/// mix back to rho at tolerance `tol`.
ComplexMatrix mixing_from_ensemble(const DensityMatrix& rho, const Ensemble& ensemble,
                                   double tol = 1e-8);

bool approx_equal(const DensityMatrix& a, const DensityMatrix& b, double tol = 1e-8);

}  // namespace imag

#endif
