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

#ifndef IMAG_CHANNELS_HPP
#define IMAG_CHANNELS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "imag/pure.hpp"
#include "imag/states.hpp"

namespace imag {

struct ChannelBranch {
  double p = 0.0;
  DensityMatrix state;
};

/// Completely positive trace-preserving map with real Kraus operators, the
/// free operations of this theory. All operators share the shape
/// d_out x d_in and satisfy sum_j K_j^T K_j = I to 1e-9.
class RealKrausChannel {
 public:
  explicit RealKrausChannel(std::vector<RealMatrix> kraus);

  /// Builds from complex matrices after checking every entry is real to
  /// `realness_tol`. ValidationError names "real_entries" or "completeness".
  static RealKrausChannel from_complex(const std::vector<ComplexMatrix>& kraus,
                                       double realness_tol = 1e-12);

  std::size_t dim_in() const { return dim_in_; }
  std::size_t dim_out() const { return dim_out_; }
  std::size_t size() const { return kraus_.size(); }
  const std::vector<RealMatrix>& kraus() const { return kraus_; }

  DensityMatrix apply(const DensityMatrix& rho) const;

  /// Measurement branches (p_j, K_j rho K_j^T / p_j); branches with
  /// p_j < 1e-12 are dropped.
  std::vector<ChannelBranch> branches(const DensityMatrix& rho) const;

 private:
  std::vector<RealMatrix> kraus_;
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
};

/// Report-based validation of raw Kraus input (complex entries allowed in
/// the representation, not in the values).
struct ChannelValidation {
  bool ok = false;
  double max_imag_entry = 0.0;
  double completeness_residual = 0.0;
  std::string violation;  // empty, "shape", "real_entries" or "completeness"
};

ChannelValidation validate_channel(const std::vector<ComplexMatrix>& kraus,
                                   double realness_tol = 1e-12,
                                   double completeness_tol = 1e-9);

/// The channel that prepares an ensemble from one pure input state.
struct EnsembleChannel {
  /// eta = sqrt((1+x)/2)|e1> + i sqrt((1-x)/2)|e2> with x the ensemble's
  /// average conjugate overlap.
  PureState eta;
  RealKrausChannel channel;
  /// Per-branch global phase alpha_j: K_j eta = sqrt(p_j) e^{i alpha_j} psi_j.
  std::vector<double> phases;
};

/// For an ensemble {p_j, psi_j} with average overlap x = sum p_j x_j, builds
/// the real channel whose branches on |eta><eta| are exactly the psi_j with
/// probabilities p_j (each up to a recorded global phase). Throws
/// DegenerateDenominatorError if x = 1 while some branch has x_j < 1, which
/// cannot happen for consistent input.
EnsembleChannel ensemble_channel(const Ensemble& ensemble);

/// Pure-state conversion criterion: psi -> phi under real operations iff
/// overlap(phi) >= overlap(psi) (compared at tolerance `tol`).
bool pure_convertible(const PureState& psi, const PureState& phi, double tol = 1e-10);

/// Explicit real channel with apply(|psi><psi|) = |phi><phi|, built from the
/// canonical rotations and a two-branch scaling in the canonical plane.
/// Throws ValidationError("convertible") when pure_convertible is false.
/// Input dimensions of psi and phi may differ; both must be >= 2.
RealKrausChannel pure_conversion_channel(const PureState& psi, const PureState& phi);

struct QubitConvertibility {
  bool ok = false;
  /// |Im rho_12| for source and target.
  double m1_rho = 0.0;
  double m1_sigma = 0.0;
  /// (Im rho_12)^2 / (rho_11 rho_22 - (Re rho_12)^2), 0 when rho_11 rho_22 = 0.
  double m2_rho = 0.0;
  double m2_sigma = 0.0;
};

/// Exact qubit-to-qubit conversion criterion: both monotones of the source
/// must dominate the target's. Throws NotQubitError unless both are d = 2.
QubitConvertibility qubit_convertible(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      double tol = 1e-10);

/// Deterministic random real channel: a Haar-random real orthogonal matrix
/// on the dilated space n_kraus*d_out, truncated to d_in columns and cut into
/// n_kraus blocks. Requires n_kraus*d_out >= d_in (ParamOutOfRangeError).
RealKrausChannel random_real_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus,
                                     std::uint64_t seed);

}  // namespace imag

#endif
