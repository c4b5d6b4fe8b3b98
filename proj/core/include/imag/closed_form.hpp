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

#ifndef IMAG_CLOSED_FORM_HPP
#define IMAG_CLOSED_FORM_HPP

#include "imag/states.hpp"

namespace imag {

/// S(Re rho) - S(rho), base-2 entropies, clamped to be >= 0.
double rel_entropy_imaginarity(const DensityMatrix& rho);

/// 1 - F(rho, conj(rho)) with F the root fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity_imaginarity(const DensityMatrix& rho);

/// 1 - Tr[rho^mu conj(rho)^(1-mu)] for mu in (0, 1) (ParamOutOfRangeError
/// otherwise). Zero eigenvalues map to zero under both powers.
double tsallis_imaginarity(const DensityMatrix& rho, double mu);

struct RobustnessResult {
  /// min s >= 0 such that (rho + s*tau)/(1+s) is a real state for some tau.
  double s = 0.0;
  /// A feasible mixing state at s (+ bisection tolerance).
  DensityMatrix witness_tau;
  /// Feasibility subproblems solved during bracketing and bisection.
  int iterations = 0;
};

/// Robustness of imaginarity by bisection over s. The inner feasibility
/// question, does a density matrix tau with Im(tau) = -Im(rho)/s exist, is a
/// concave maximization of the minimum eigenvalue of R + i*Y over real
/// symmetric R with tr R = 1, solved here in closed form: the optimum is
/// R = |iY| + (1 - ||iY||_tr)/d * I with value (1 - ||iY||_tr)/d.
/// Feasibility is declared at lambda_min >= -1e-8. Real states return s = 0
/// with tau = I/d. Throws NoConvergenceError if the upper bracket fails to
/// become feasible after 10 doublings.
RobustnessResult robustness_imaginarity(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace imag

#endif
