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

#ifndef IMAG_NOGO_HPP
#define IMAG_NOGO_HPP

#include <string>
#include <utility>
#include <vector>

#include "imag/monotone.hpp"
#include "imag/roof.hpp"
#include "imag/states.hpp"

namespace imag {

/// A tuple demonstrating that no finite measure list decides mixed-state
/// conversion: every supplied measure weakly dominates on (rho, sigma), yet
/// the extra f_k measure strictly increases.
struct NogoWitness {
  double p1 = 0.0;
  double lambda = 0.0;
  double eta = 0.0;
  double k = 0.0;
  std::vector<std::string> measure_names;
  std::vector<double> measure_values_rho;
  std::vector<double> measure_values_sigma;
  double fk_rho = 0.0;
  double fk_sigma = 0.0;
};

struct NogoGrid {
  std::vector<double> p1_values;
  std::vector<double> lambda_values;
  std::vector<double> eta_values;

  /// p1 over {0.05, ..., 0.95}; lambda, eta over {0.05, ..., 0.45}.
  static NogoGrid defaults();
};

/// The witness family: rho = p1|psi1><psi1| + p2|psi2><psi2| with
/// psi1 = (|e1> + i|e2>)/sqrt(2) and psi2 = sqrt(lambda)|e3> +
/// i sqrt(1-lambda)|e4| (block diagonal), and the pure
/// sigma = |phi_eta><phi_eta|, phi_eta = sqrt(eta)|e1> + i sqrt(1-eta)|e2>,
/// both on d = 4. Requires p1 in (0,1) and lambda, eta in (0, 1/2).
std::pair<DensityMatrix, DensityMatrix> build_states(double p1, double lambda, double eta);

/// Closed-form I_{f_k} on the block family above, p1 f_k(0) + p2 f_k(1-2 lambda),
/// after verifying rho has exactly that form (WrongFormError at 1e-8).
double fk_measure_direct(const DensityMatrix& rho, double k);

/// The five built-in rows the search defends against by default: geometric,
/// robustness_row, entropy, fidelity_row, tsallis (mu = 0.5).
std::vector<MonotoneF> default_nogo_measures();

/// Lexicographic grid search (p1, then lambda, then eta; k = 2 eta) for the
/// first tuple where every measure in `measures` satisfies
/// I(rho) >= I(sigma) - 1e-9 while I_{f_k}(rho) < I_{f_k}(sigma) - 1e-9.
/// Measure values are produced by the roof optimizer; hits are re-verified
/// at doubled n_starts (and checked against fk_measure_direct to 1e-5)
/// before being returned. Throws NoWitnessFoundError when the grid is
/// exhausted.
NogoWitness find_witness(const std::vector<MonotoneF>& measures,
                         const NogoGrid& grid = NogoGrid::defaults(),
                         const RoofOptions& opts = {});

}  // namespace imag

#endif
