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

#include "imag/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace imag {

double rel_entropy_imaginarity(const DensityMatrix& rho) {
  const auto [re, im] = real_imag_parts(rho);
  (void)im;
  const double value = von_neumann_entropy(re.to_complex()) - von_neumann_entropy(rho.matrix());
  return std::max(value, 0.0);
}

double fidelity_imaginarity(const DensityMatrix& rho) {
  const double f = root_fidelity(rho.matrix(), rho.matrix().conj());
  return std::clamp(1.0 - f, 0.0, 1.0);
}

double tsallis_imaginarity(const DensityMatrix& rho, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) {
    throw ParamOutOfRangeError("tsallis_imaginarity: mu must lie in (0, 1)");
  }
  // Fractional powers are infinitely steep at 0: spectral noise (~1e-16) on
  // rank-deficient inputs would otherwise leak into the trace at the 1e-4
  // scale for small mu. Eigenvalues at or below the floor are true zeros.
  static constexpr double kEigFloor = 1e-12;
  const ComplexMatrix rho_mu = func_psd(rho.matrix(), [mu](double lam) {
    return lam > kEigFloor ? std::pow(lam, mu) : 0.0;
  });
  const ComplexMatrix rho_one_minus_mu = func_psd(rho.matrix(), [mu](double lam) {
    return lam > kEigFloor ? std::pow(lam, 1.0 - mu) : 0.0;
  });
  // conj(rho)^(1-mu) = conj(rho^(1-mu)) since conjugation commutes with the
  // functional calculus of Hermitian matrices.
  const cplx tr = (rho_mu * rho_one_minus_mu.conj()).trace();
  return std::clamp(1.0 - tr.real(), 0.0, 1.0);
}

namespace {

struct Feasibility {
  double lambda_star;      // max over R of lambda_min(R + iY), tr R = 1
  ComplexMatrix tau;       // the maximizing R + iY (not necessarily PSD)
};

// Y = -Im(rho)/s is real antisymmetric, so iY is Hermitian. The optimum of
// max_{R real sym, tr R = 1} lambda_min(R + iY) is (1 - ||iY||_tr)/d,
// attained at R = |iY| + (1 - ||iY||_tr)/d * I.
Feasibility solve_feasibility(const RealMatrix& im_rho, double s) {
  const std::size_t d = im_rho.rows();
  ComplexMatrix iy(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) iy(i, j) = cplx(0.0, -im_rho(i, j) / s);
  }
  const Spectrum spec = eig_hermitian(iy);
  double trace_norm = 0.0;
  for (double lam : spec.eigenvalues) trace_norm += std::abs(lam);
  const double lambda_star = (1.0 - trace_norm) / static_cast<double>(d);

  // |iY| assembled directly from the spectrum.
  ComplexMatrix tau(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double a = std::abs(spec.eigenvalues[k]);
    if (a == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        tau(i, j) += a * spec.eigenvectors(i, k) * std::conj(spec.eigenvectors(j, k));
      }
    }
  }
  const double shift = std::max(lambda_star, 0.0);
  for (std::size_t i = 0; i < d; ++i) tau(i, i) += shift;
  // Add back iY so that Im(tau) = Y.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) tau(i, j) += cplx(0.0, -im_rho(i, j) / s);
  }
  return Feasibility{lambda_star, tau.hermitized()};
}

}  // namespace

RobustnessResult robustness_imaginarity(const DensityMatrix& rho, double tol) {
  const std::size_t d = rho.dim();
  const auto [re, im] = real_imag_parts(rho);
  (void)re;
  double max_im = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) max_im = std::max(max_im, std::abs(im(i, j)));
  }
  if (max_im < 1e-14) {
    ComplexMatrix eye = ComplexMatrix::identity(d) * cplx(1.0 / static_cast<double>(d));
    return RobustnessResult{0.0, DensityMatrix::validated(eye), 0};
  }

  constexpr double kFeasible = -1e-8;
  int iterations = 0;
  auto feasible_at = [&](double s) {
    ++iterations;
    return solve_feasibility(im, s);
  };

  double s_hi = 2.0 * static_cast<double>(d) * max_im;
  Feasibility hi = feasible_at(s_hi);
  int doublings = 0;
  while (hi.lambda_star < kFeasible) {
    if (++doublings > 10) {
      throw NoConvergenceError("robustness_imaginarity: upper bracket never became feasible");
    }
    s_hi *= 2.0;
    hi = feasible_at(s_hi);
  }

  double s_lo = 0.0;
  while (s_hi - s_lo > tol) {
    const double s_mid = 0.5 * (s_lo + s_hi);
    Feasibility mid = feasible_at(s_mid);
    if (mid.lambda_star >= kFeasible) {
      s_hi = s_mid;
      hi = std::move(mid);
    } else {
      s_lo = s_mid;
    }
  }

  return RobustnessResult{s_hi, DensityMatrix::validated(hi.tau, 1e-6), iterations};
}

}  // namespace imag
