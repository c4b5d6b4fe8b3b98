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

#include "imag/roof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "nelder_mead.hpp"

namespace imag {

namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kEscalationGap = 1e-6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// sqrt(lambda_j)|v_j| for the positive eigenvalues of rho, descending.
struct Loadings {
  std::size_t d = 0;
  std::size_t r = 0;
  std::vector<cplx> cols;  // cols[j*d + a]
  std::vector<cplx> top_eigvec;
};

Loadings loadings_of(const DensityMatrix& rho) {
  const Spectrum spec = eig_hermitian(rho.matrix());
  Loadings out;
  out.d = rho.dim();
  for (std::size_t k = out.d; k-- > 0;) {
    const double lam = spec.eigenvalues[k];
    if (lam <= kRankCutoff) break;
    const double scale = std::sqrt(lam);
    for (std::size_t a = 0; a < out.d; ++a) out.cols.push_back(scale * spec.eigenvectors(a, k));
    ++out.r;
    if (out.r == 1) {
      out.top_eigvec.resize(out.d);
      for (std::size_t a = 0; a < out.d; ++a) out.top_eigvec[a] = spec.eigenvectors(a, k);
    }
  }
  return out;
}

enum class Kind { kRoof, kOverlap };

// Objective over the unconstrained parameterization of mixing matrices:
// theta holds the real/imag pairs of an m x r complex matrix (column-major),
// which is QR-orthonormalized into an isometry before evaluation.
class MixingObjective {
 public:
  MixingObjective(Kind kind, const MonotoneF* f, const Loadings* load, std::size_t m)
      : kind_(kind), f_(f), load_(load), m_(m), a_(m * load->r), psi_(load->d) {}

  std::size_t n_params() const { return 2 * m_ * load_->r; }

  double operator()(const std::vector<double>& theta) const {
    load_theta(theta);
    orthonormalize();
    const std::size_t r = load_->r, d = load_->d;
    double acc = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      std::fill(psi_.begin(), psi_.end(), cplx(0.0));
      for (std::size_t j = 0; j < r; ++j) {
        const cplx mij = a_[j * m_ + i];
        if (mij == cplx(0.0)) continue;
        const cplx* lj = &load_->cols[j * d];
        for (std::size_t a = 0; a < d; ++a) psi_[a] += mij * lj[a];
      }
      double p = 0.0;
      cplx w = 0.0;
      for (std::size_t a = 0; a < d; ++a) {
        p += std::norm(psi_[a]);
        w += psi_[a] * psi_[a];
      }
      if (kind_ == Kind::kRoof) {
        if (p > 1e-15) acc += p * (*f_)(std::min(std::abs(w) / p, 1.0));
      } else {
        acc -= std::abs(w);
      }
    }
    return acc;
  }

  ComplexMatrix mixing_of(const std::vector<double>& theta) const {
    load_theta(theta);
    orthonormalize();
    ComplexMatrix mix(m_, load_->r);
    for (std::size_t j = 0; j < load_->r; ++j)
      for (std::size_t i = 0; i < m_; ++i) mix(i, j) = a_[j * m_ + i];
    return mix;
  }

 private:
  void load_theta(const std::vector<double>& theta) const {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = cplx(theta[2 * k], theta[2 * k + 1]);
  }

  // Modified Gram-Schmidt over the columns, two projection passes, with a
  // deterministic basis-vector fallback for degenerate columns.
  void orthonormalize() const {
    const std::size_t r = load_->r;
    for (std::size_t j = 0; j < r; ++j) {
      std::size_t fallback = 0;
      for (;;) {
        cplx* colj = &a_[j * m_];
        for (int pass = 0; pass < 2; ++pass) {
          for (std::size_t jj = 0; jj < j; ++jj) {
            const cplx* coljj = &a_[jj * m_];
            cplx c = 0.0;
            for (std::size_t i = 0; i < m_; ++i) c += std::conj(coljj[i]) * colj[i];
            for (std::size_t i = 0; i < m_; ++i) colj[i] -= c * coljj[i];
          }
        }
        double nrm2 = 0.0;
        for (std::size_t i = 0; i < m_; ++i) nrm2 += std::norm(colj[i]);
        if (nrm2 > 1e-24) {
          const double inv = 1.0 / std::sqrt(nrm2);
          for (std::size_t i = 0; i < m_; ++i) colj[i] *= inv;
          break;
        }
        // Degenerate column: substitute the next standard basis vector.
        std::fill(colj, colj + m_, cplx(0.0));
        colj[fallback % m_] = 1.0;
        ++fallback;
      }
    }
  }

  Kind kind_;
  const MonotoneF* f_;
  const Loadings* load_;
  std::size_t m_;
  mutable std::vector<cplx> a_;
  mutable std::vector<cplx> psi_;
};

struct MultistartOutcome {
  double objective = 0.0;
  std::vector<double> theta;
  int n_starts = 0;
  int best_start = 0;
  double gap = 0.0;
  bool budget_exceeded = false;
  std::size_t m = 0;
};

std::vector<double> theta_of_mixing(const ComplexMatrix& mix, std::size_t m_run) {
  const std::size_t r = mix.cols();
  std::vector<double> theta(2 * m_run * r, 0.0);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < mix.rows(); ++i) {
      theta[2 * (j * m_run + i)] = mix(i, j).real();
      theta[2 * (j * m_run + i) + 1] = mix(i, j).imag();
    }
  }
  return theta;
}

MultistartOutcome run_multistart(Kind kind, const MonotoneF* f, const Loadings& load,
                                 std::size_t m, const RoofOptions& opts) {
  MixingObjective obj(kind, f, &load, m);
  const std::function<double(const std::vector<double>&)> fn =
      [&obj](const std::vector<double>& t) { return obj(t); };
  const std::size_t r = load.r;
  const std::size_t n_params = obj.n_params();

  const int n_warm = static_cast<int>(opts.warm_starts.size());
  const int total = std::max(opts.n_starts, 1 + n_warm);

  double best_val = std::numeric_limits<double>::infinity();
  double second_val = std::numeric_limits<double>::infinity();
  std::vector<double> best_theta;
  int best_start = 0;
  bool best_converged = false;

  for (int s = 0; s < total; ++s) {
    std::vector<double> theta0;
    double step0 = 0.6;
    if (s == 0) {
      // Identity mixing: the eigen-ensemble itself.
      ComplexMatrix eye(std::max(m, r), r);
      for (std::size_t j = 0; j < r; ++j) eye(j, j) = 1.0;
      theta0 = theta_of_mixing(eye, m);
      step0 = 0.2;
    } else if (s <= n_warm) {
      theta0 = theta_of_mixing(opts.warm_starts[s - 1], m);
      step0 = 0.2;
    } else {
      std::mt19937_64 rng(splitmix64(opts.seed + static_cast<std::uint64_t>(s)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      theta0.resize(n_params);
      for (double& t : theta0) t = gauss(rng);
    }

    long budget = opts.max_iters;
    detail::NelderMeadResult run = detail::nelder_mead(fn, theta0, step0, opts.tol, budget);
    budget -= run.evals;
    double step = step0;
    for (int round = 0; round < 3 && budget > 200; ++round) {
      step *= 0.15;
      detail::NelderMeadResult next = detail::nelder_mead(fn, run.x, step, opts.tol, budget);
      budget -= next.evals;
      if (next.value <= run.value) {
        run.x = std::move(next.x);
        run.value = next.value;
        run.converged = next.converged;
      }
    }

    if (run.value < best_val) {
      second_val = best_val;
      best_val = run.value;
      best_theta = std::move(run.x);
      best_start = s;
      best_converged = run.converged;
    } else if (run.value < second_val) {
      second_val = run.value;
    }
  }

  // Final refinement around the winner with shrinking simplexes.
  const double polish_tol = std::min(opts.tol, 1e-13);
  const long polish_budget = std::max<long>(2000, opts.max_iters);
  bool polish_converged = false;
  for (double step : {1e-3, 1e-6}) {
    detail::NelderMeadResult polish =
        detail::nelder_mead(fn, best_theta, step, polish_tol, polish_budget);
    if (polish.value <= best_val) {
      best_val = polish.value;
      best_theta = std::move(polish.x);
      polish_converged = polish.converged;
    }
  }

  MultistartOutcome out;
  out.objective = best_val;
  out.theta = std::move(best_theta);
  out.n_starts = total;
  out.best_start = best_start;
  out.gap = std::isfinite(second_val) ? second_val - best_val : 0.0;
  out.budget_exceeded = !(best_converged || polish_converged);
  out.m = m;
  return out;
}

RoofResult optimize(Kind kind, const MonotoneF* f, const DensityMatrix& rho,
                    const RoofOptions& opts) {
  const Loadings load = loadings_of(rho);
  const std::size_t r = load.r;

  if (r <= 1) {
    // Rank-1 shortcut: the only decomposition is the single eigenvector.
    PureState top(load.top_eigvec);
    const double x = overlap(top);
    Ensemble cert({1.0}, {top});
    const double value = (kind == Kind::kRoof) ? (*f)(x) : x;
    return RoofResult{value, std::move(cert), 0, 0, 0.0, false, 1};
  }

  if (opts.m != 0 && opts.m < r) {
    throw ParamOutOfRangeError("roof: ensemble cap m must be at least rank(rho)");
  }
  std::size_t m1 = (opts.m != 0) ? opts.m : r * r;
  for (const ComplexMatrix& w : opts.warm_starts) {
    if (w.cols() != r) {
      throw RankMismatchError("roof: warm start has wrong number of columns");
    }
    m1 = std::max(m1, w.rows());
  }

  MultistartOutcome best = run_multistart(kind, f, load, m1, opts);
  if (opts.m == 0 && best.gap > kEscalationGap && m1 < (r + 1) * (r + 1)) {
    MultistartOutcome wider = run_multistart(kind, f, load, (r + 1) * (r + 1), opts);
    if (wider.objective < best.objective) best = std::move(wider);
  }

  MixingObjective reader(kind, f, &load, best.m);
  Ensemble cert = hjw_decompositions(rho, reader.mixing_of(best.theta));

  // Report the objective evaluated on the certificate itself.
  double value = 0.0;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    const double x = overlap(cert.state(i));
    value += cert.weight(i) * ((kind == Kind::kRoof) ? (*f)(x) : x);
  }
  if (kind == Kind::kOverlap) value = std::clamp(value, 0.0, 1.0);

  return RoofResult{value,           std::move(cert),      best.n_starts, best.best_start,
                    best.gap,        best.budget_exceeded, best.m};
}

}  // namespace

RoofResult convex_roof(const MonotoneF& f, const DensityMatrix& rho, const RoofOptions& opts) {
  return optimize(Kind::kRoof, &f, rho, opts);
}

RoofResult concave_roof_overlap(const DensityMatrix& rho, const RoofOptions& opts) {
  return optimize(Kind::kOverlap, nullptr, rho, opts);
}

RoofResult tilde_measure(const MonotoneF& f, const DensityMatrix& rho, const RoofOptions& opts) {
  RoofResult ov = concave_roof_overlap(rho, opts);
  ov.value = f(ov.value);
  return ov;
}

QubitTildeForm qubit_closed_forms(const MonotoneF& f, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw NotQubitError("qubit_closed_forms: state is not a qubit");
  const cplx b = rho(0, 1);
  const double abs_b = std::abs(b);
  const double im_b = b.imag();
  const double z = std::sqrt(std::max(0.0, 1.0 - 4.0 * abs_b * abs_b));
  const double tilde = f(std::sqrt(std::max(0.0, 1.0 - 4.0 * im_b * im_b)));

  // Both branches carry the off-diagonal of rho itself, so the mixture is
  // exact once the weight matches the diagonal.
  const double phi = ((abs_b > 0.0) ? std::arg(b) : 0.0) + 0.5 * std::numbers::pi;
  const cplx e_phi = std::polar(1.0, phi);
  const double cp = std::sqrt(0.5 * (1.0 + z));
  const double cm = std::sqrt(0.5 * (1.0 - z));
  const PureState psi_plus({e_phi * cp, cplx(0.0, 1.0) * cm});
  const PureState psi_minus({e_phi * cm, cplx(0.0, 1.0) * cp});

  double lambda = 0.5;
  if (z > 1e-12) {
    lambda = std::clamp((2.0 * rho(0, 0).real() - 1.0 + z) / (2.0 * z), 0.0, 1.0);
  }

  Ensemble ens = (lambda < 1e-14)         ? Ensemble({1.0}, {psi_minus})
                 : (lambda > 1.0 - 1e-14) ? Ensemble({1.0}, {psi_plus})
                                          : Ensemble({lambda, 1.0 - lambda}, {psi_plus, psi_minus});
  return QubitTildeForm{tilde, std::move(ens), lambda};
}

DensityMatrix prop4_family(double lambda, double z) {
  if (lambda < 0.0 || lambda > 1.0) {
    throw ParamOutOfRangeError("prop4_family: lambda must lie in [0, 1]");
  }
  if (z < 0.0 || z >= 1.0) {
    throw ParamOutOfRangeError("prop4_family: z must lie in [0, 1)");
  }
  const double cp = std::sqrt(0.5 * (1.0 + z));
  const double cm = std::sqrt(0.5 * (1.0 - z));
  ComplexMatrix tau(3, 3);
  tau(0, 0) = lambda * cp * cp;
  tau(0, 1) = lambda * cp * cplx(0.0, 1.0) * cm;  // cp * conj(-i cm)
  tau(1, 0) = std::conj(tau(0, 1));
  tau(1, 1) = lambda * cm * cm;
  tau(2, 2) = 1.0 - lambda;
  return DensityMatrix::validated(tau, 1e-8);
}

std::vector<ConvexityProbeRow> convexity_probe(const MonotoneF& f,
                                               const std::vector<DensityMatrix>& states,
                                               const RoofOptions& opts) {
  std::vector<ConvexityProbeRow> rows;
  rows.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const DensityMatrix& rho = states[i];
    RoofResult tilde = tilde_measure(f, rho, opts);
    RoofOptions seeded = opts;
    if (numerical_rank(rho) > 1) {
      seeded.warm_starts.push_back(mixing_from_ensemble(rho, tilde.certificate));
    }
    RoofResult roof = convex_roof(f, rho, seeded);
    rows.push_back(ConvexityProbeRow{i, tilde.value, roof.value, tilde.value - roof.value});
  }
  return rows;
}

}  // namespace imag
