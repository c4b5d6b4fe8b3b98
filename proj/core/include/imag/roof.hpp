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

#ifndef IMAG_ROOF_HPP
#define IMAG_ROOF_HPP

#include <cstdint>
#include <vector>

#include "imag/monotone.hpp"
#include "imag/pure.hpp"
#include "imag/states.hpp"

namespace imag {

/// Options of the ensemble-decomposition optimizer.
///
/// The search runs `n_starts` seeded Nelder-Mead descents over the
/// unconstrained parameterization of m x r column-orthonormal mixing
/// matrices (QR-orthonormalized), plus one start at the identity mixing
/// (the eigen-ensemble) and one per entry of `warm_starts`. Results are
/// reduced deterministically: best value, ties broken by start index.
struct RoofOptions {
  /// Ensemble size cap m. 0 means the default r^2, escalated once to
  /// (r+1)^2 when the two best starts disagree by more than 1e-6.
  std::size_t m = 0;
  int n_starts = 32;
  std::uint64_t seed = 0;
  /// Objective-evaluation budget per start.
  long max_iters = 2000;
  double tol = 1e-9;
  /// Extra mixing matrices used as additional starts (padded with zero rows
  /// if smaller than the run's m). Useful for seeding the roof search with a
  /// known-good decomposition, e.g. another optimizer's certificate.
  std::vector<ComplexMatrix> warm_starts;
};

struct RoofResult {
  double value = 0.0;
  Ensemble certificate;
  /// Number of starts actually run (0 for the rank-1 shortcut).
  int n_starts = 0;
  int best_start = 0;
  /// |best - second best| across starts, in objective units.
  double gap_estimate = 0.0;
  /// Set when the winning descent exhausted its budget before converging.
  bool budget_exceeded = false;
  std::size_t m_used = 0;
};

/// Convex roof min over ensembles of sum_i p_i f(x_i). `value` equals the
/// objective evaluated on `certificate`.
RoofResult convex_roof(const MonotoneF& f, const DensityMatrix& rho,
                       const RoofOptions& opts = {});

/// Concave roof max over ensembles of sum_i p_i x_i; `value` is the maximal
/// average conjugate overlap in [0, 1].
RoofResult concave_roof_overlap(const DensityMatrix& rho, const RoofOptions& opts = {});

/// Least-pure-input monotone f(max average overlap). `value` = f(overlap);
/// the certificate and gap are those of the overlap maximization.
RoofResult tilde_measure(const MonotoneF& f, const DensityMatrix& rho,
                         const RoofOptions& opts = {});

/// Closed-form qubit solution: tilde value f(sqrt(1 - 4 (Im rho_01)^2)) and
/// the two-branch optimal ensemble, whose branches share the off-diagonal of
/// rho. `lambda` is the weight of the first branch, solved from the diagonal.
struct QubitTildeForm {
  double tilde = 0.0;
  Ensemble optimal_ensemble;
  double lambda = 0.0;
};
QubitTildeForm qubit_closed_forms(const MonotoneF& f, const DensityMatrix& rho);

/// The qutrit family tau = lambda |phi_z><phi_z| + (1-lambda)|e3><e3| with
/// phi_z = sqrt((1+z)/2)|e1> - i sqrt((1-z)/2)|e2>, lambda in [0,1],
/// z in [0,1). Its tilde and roof values are known in closed form:
/// f(lambda z + 1 - lambda) and lambda f(z).
DensityMatrix prop4_family(double lambda, double z);

struct ConvexityProbeRow {
  std::size_t index = 0;
  double tilde = 0.0;
  double roof = 0.0;
  double excess = 0.0;  // tilde - roof
};

/// Evaluates tilde and roof per state; the roof search is seeded with the
/// tilde certificate so the reported excess is never spuriously negative.
std::vector<ConvexityProbeRow> convexity_probe(const MonotoneF& f,
                                               const std::vector<DensityMatrix>& states,
                                               const RoofOptions& opts = {});

}  // namespace imag

#endif
