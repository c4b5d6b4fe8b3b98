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

#include "imag/nogo.hpp"

#include <cmath>
#include <map>

namespace imag {

namespace {

constexpr double kMargin = 1e-9;
constexpr double kDirectVsRoofTol = 1e-5;

std::vector<double> arange(double lo, double hi, double step) {
  std::vector<double> out;
  for (double v = lo; v < hi + 0.5 * step; v += step) out.push_back(v);
  return out;
}

}  // namespace

NogoGrid NogoGrid::defaults() {
  NogoGrid g;
  g.p1_values = arange(0.05, 0.95, 0.05);
  g.lambda_values = arange(0.05, 0.45, 0.05);
  g.eta_values = arange(0.05, 0.45, 0.05);
  return g;
}

std::pair<DensityMatrix, DensityMatrix> build_states(double p1, double lambda, double eta) {
  if (!(p1 > 0.0 && p1 < 1.0)) {
    throw ParamOutOfRangeError("build_states: p1 must lie in (0, 1)");
  }
  if (!(lambda > 0.0 && lambda < 0.5) || !(eta > 0.0 && eta < 0.5)) {
    throw ParamOutOfRangeError("build_states: lambda and eta must lie in (0, 1/2)");
  }
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  const PureState psi1({cplx(inv_rt2, 0.0), cplx(0.0, inv_rt2)});
  const PureState psi2({cplx(std::sqrt(lambda), 0.0), cplx(0.0, std::sqrt(1.0 - lambda))});
  const DensityMatrix rho =
      direct_sum(p1, DensityMatrix::from_pure(psi1), DensityMatrix::from_pure(psi2));

  const PureState phi({cplx(std::sqrt(eta), 0.0), cplx(0.0, std::sqrt(1.0 - eta)), cplx(0.0),
                       cplx(0.0)});
  return {rho, DensityMatrix::from_pure(phi)};
}

double fk_measure_direct(const DensityMatrix& rho, double k) {
  const MonotoneF fk = MonotoneF::builtin("fk", {k});
  if (rho.dim() != 4) {
    throw WrongFormError("fk_measure_direct: state is not on d = 4");
  }
  const double p1 = rho(0, 0).real() + rho(1, 1).real();
  const double p2 = rho(2, 2).real() + rho(3, 3).real();
  const double lambda = (p2 > 1e-12) ? rho(2, 2).real() / p2 : 0.0;

  ComplexMatrix expected(4, 4);
  expected(0, 0) = 0.5 * p1;
  expected(0, 1) = cplx(0.0, -0.5 * p1);
  expected(1, 0) = cplx(0.0, 0.5 * p1);
  expected(1, 1) = 0.5 * p1;
  const double cross = p2 * std::sqrt(std::max(0.0, lambda * (1.0 - lambda)));
  expected(2, 2) = p2 * lambda;
  expected(2, 3) = cplx(0.0, -cross);
  expected(3, 2) = cplx(0.0, cross);
  expected(3, 3) = p2 * (1.0 - lambda);
  if ((rho.matrix() - expected).max_abs() > 1e-8) {
    throw WrongFormError("fk_measure_direct: state is not of the block witness form");
  }
  return p1 * fk(0.0) + p2 * fk(1.0 - 2.0 * lambda);
}

std::vector<MonotoneF> default_nogo_measures() {
  return {MonotoneF::builtin("geometric"), MonotoneF::builtin("robustness_row"),
          MonotoneF::builtin("entropy"), MonotoneF::builtin("fidelity_row"),
          MonotoneF::builtin("tsallis", {0.5})};
}

NogoWitness find_witness(const std::vector<MonotoneF>& measures, const NogoGrid& grid,
                         const RoofOptions& opts) {
  RoofOptions verify_opts = opts;
  verify_opts.n_starts = std::max(2, 2 * opts.n_starts);
  verify_opts.seed = opts.seed + 0x9E3779B9ull;

  // rho depends on (p1, lambda) only; cache its measure values across eta.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<double>> rho_cache;

  for (std::size_t ip = 0; ip < grid.p1_values.size(); ++ip) {
    const double p1 = grid.p1_values[ip];
    for (std::size_t il = 0; il < grid.lambda_values.size(); ++il) {
      const double lambda = grid.lambda_values[il];
      bool any_eta = false;
      for (double eta : grid.eta_values) any_eta = any_eta || lambda < eta;
      if (!any_eta) continue;

      for (double eta : grid.eta_values) {
        // The f_k inequality can only fail when the sigma block is harder to
        // reach, i.e. lambda < eta; skip everything else cheaply.
        if (!(lambda < eta)) continue;
        const double k = 2.0 * eta;
        const auto [rho, sigma] = build_states(p1, lambda, eta);

        const double fk_rho_direct = fk_measure_direct(rho, k);
        const MonotoneF fk = MonotoneF::builtin("fk", {k});
        const double fk_sigma = convex_roof(fk, sigma, opts).value;
        if (!(fk_rho_direct < fk_sigma - kMargin)) continue;

        auto cached = rho_cache.find({ip, il});
        if (cached == rho_cache.end()) {
          std::vector<double> values;
          values.reserve(measures.size());
          for (const MonotoneF& f : measures) values.push_back(convex_roof(f, rho, opts).value);
          cached = rho_cache.emplace(std::make_pair(ip, il), std::move(values)).first;
        }

        bool dominated = true;
        std::vector<double> sigma_values;
        sigma_values.reserve(measures.size());
        for (std::size_t im = 0; im < measures.size(); ++im) {
          const double sv = convex_roof(measures[im], sigma, opts).value;
          sigma_values.push_back(sv);
          if (!(cached->second[im] >= sv - kMargin)) {
            dominated = false;
            break;
          }
        }
        if (!dominated) continue;

        // Candidate hit: re-verify everything at doubled n_starts.
        const double fk_rho_roof = convex_roof(fk, rho, verify_opts).value;
        if (std::abs(fk_rho_roof - fk_rho_direct) > kDirectVsRoofTol) continue;
        if (!(fk_rho_roof < fk_sigma - kMargin)) continue;

        NogoWitness w;
        w.p1 = p1;
        w.lambda = lambda;
        w.eta = eta;
        w.k = k;
        w.fk_rho = fk_rho_roof;
        w.fk_sigma = fk_sigma;
        bool verified = true;
        for (std::size_t im = 0; im < measures.size(); ++im) {
          const double rv = convex_roof(measures[im], rho, verify_opts).value;
          const double sv = sigma_values[im];
          if (!(rv >= sv - kMargin)) {
            verified = false;
            break;
          }
          w.measure_names.push_back(measures[im].name());
          w.measure_values_rho.push_back(rv);
          w.measure_values_sigma.push_back(sv);
        }
        if (verified) return w;
      }
    }
  }
  throw NoWitnessFoundError("find_witness: grid exhausted without a witness tuple");
}

}  // namespace imag
