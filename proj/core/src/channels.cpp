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

#include "imag/channels.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace imag {

namespace {

constexpr double kCompletenessTol = 1e-9;
constexpr double kBranchCutoff = 1e-12;

double completeness_residual_real(const std::vector<RealMatrix>& kraus) {
  const std::size_t din = kraus.front().cols();
  RealMatrix sum(din, din);
  for (const RealMatrix& k : kraus) {
    for (std::size_t a = 0; a < din; ++a) {
      for (std::size_t b = 0; b < din; ++b) {
        double acc = 0.0;
        for (std::size_t r = 0; r < k.rows(); ++r) acc += k(r, a) * k(r, b);
        sum(a, b) += acc;
      }
    }
  }
  double residual = 0.0;
  for (std::size_t a = 0; a < din; ++a) {
    for (std::size_t b = 0; b < din; ++b) {
      residual = std::max(residual, std::abs(sum(a, b) - (a == b ? 1.0 : 0.0)));
    }
  }
  return residual;
}

}  // namespace

RealKrausChannel::RealKrausChannel(std::vector<RealMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) {
    throw ValidationError("kraus_nonempty", "channel needs at least one Kraus operator");
  }
  dim_out_ = kraus_.front().rows();
  dim_in_ = kraus_.front().cols();
  if (dim_out_ == 0 || dim_in_ == 0) {
    throw DimensionMismatchError("channel: empty Kraus operator");
  }
  for (const RealMatrix& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw DimensionMismatchError("channel: Kraus operators must share one shape");
    }
  }
  const double residual = completeness_residual_real(kraus_);
  if (residual > kCompletenessTol) {
    throw ValidationError("completeness", "sum K^T K deviates from identity by " +
                                              std::to_string(residual));
  }
}

RealKrausChannel RealKrausChannel::from_complex(const std::vector<ComplexMatrix>& kraus,
                                                double realness_tol) {
  std::vector<RealMatrix> real_ops;
  real_ops.reserve(kraus.size());
  for (const ComplexMatrix& k : kraus) {
    if (k.max_abs_imag() > realness_tol) {
      throw ValidationError("real_entries", "Kraus operator has an imaginary entry of magnitude " +
                                                std::to_string(k.max_abs_imag()));
    }
    RealMatrix r(k.rows(), k.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      for (std::size_t j = 0; j < k.cols(); ++j) r(i, j) = k(i, j).real();
    }
    real_ops.push_back(std::move(r));
  }
  return RealKrausChannel(std::move(real_ops));
}

DensityMatrix RealKrausChannel::apply(const DensityMatrix& rho) const {
  if (rho.dim() != dim_in_) {
    throw DimensionMismatchError("channel apply: state dimension does not match d_in");
  }
  ComplexMatrix out(dim_out_, dim_out_);
  for (const RealMatrix& k : kraus_) {
    const ComplexMatrix kc = k.to_complex();
    out = out + kc * rho.matrix() * kc.transpose();
  }
  return DensityMatrix::validated(out);
}

std::vector<ChannelBranch> RealKrausChannel::branches(const DensityMatrix& rho) const {
  if (rho.dim() != dim_in_) {
    throw DimensionMismatchError("channel branches: state dimension does not match d_in");
  }
  std::vector<ChannelBranch> out;
  for (const RealMatrix& k : kraus_) {
    const ComplexMatrix kc = k.to_complex();
    const ComplexMatrix m = kc * rho.matrix() * kc.transpose();
    const double p = m.trace().real();
    if (p < kBranchCutoff) continue;
    out.push_back(ChannelBranch{p, DensityMatrix::validated(m * cplx(1.0 / p))});
  }
  return out;
}

ChannelValidation validate_channel(const std::vector<ComplexMatrix>& kraus, double realness_tol,
                                   double completeness_tol) {
  ChannelValidation report;
  if (kraus.empty()) {
    report.violation = "shape";
    return report;
  }
  const std::size_t dout = kraus.front().rows();
  const std::size_t din = kraus.front().cols();
  for (const ComplexMatrix& k : kraus) {
    if (k.rows() != dout || k.cols() != din || din == 0 || dout == 0) {
      report.violation = "shape";
      return report;
    }
    report.max_imag_entry = std::max(report.max_imag_entry, k.max_abs_imag());
  }
  ComplexMatrix sum(din, din);
  for (const ComplexMatrix& k : kraus) sum = sum + k.adjoint() * k;
  report.completeness_residual = (sum - ComplexMatrix::identity(din)).max_abs();

  if (report.max_imag_entry > realness_tol) {
    report.violation = "real_entries";
  } else if (report.completeness_residual > completeness_tol) {
    report.violation = "completeness";
  } else {
    report.ok = true;
  }
  return report;
}

EnsembleChannel ensemble_channel(const Ensemble& ensemble) {
  const std::size_t n = ensemble.size();
  const std::size_t d = ensemble.state(0).dim();

  std::vector<CanonicalForm> forms;
  forms.reserve(n);
  double x = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    forms.push_back(canonical_form(ensemble.state(j)));
    x += ensemble.weight(j) * forms.back().x;
  }
  x = std::clamp(x, 0.0, 1.0);
  const double cx = std::sqrt(0.5 * (1.0 + x));
  const double sx = std::sqrt(0.5 * (1.0 - x));

  std::vector<cplx> eta_amp(d, cplx(0.0));
  eta_amp[0] = cx;
  eta_amp[1] = cplx(0.0, sx);
  PureState eta(std::move(eta_amp));

  std::vector<RealMatrix> kraus;
  std::vector<double> phases;
  kraus.reserve(n);
  phases.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = forms[j].x;
    const double cj = std::sqrt(0.5 * (1.0 + xj));
    const double sj = std::sqrt(0.5 * (1.0 - xj));
    double rs = 1.0;
    if (sx > 1e-12) {
      rs = sj / sx;
    } else if (sj > 1e-8) {
      throw DegenerateDenominatorError(
          "ensemble_channel: average overlap is 1 but a branch overlap is below 1");
    }
    const double root_p = std::sqrt(ensemble.weight(j));
    RealMatrix k(d, d);
    k(0, 0) = root_p * cj / cx;
    k(1, 1) = root_p * rs;
    for (std::size_t a = 2; a < d; ++a) k(a, a) = root_p;
    kraus.push_back(forms[j].rotation.transpose() * k);
    phases.push_back(forms[j].phase);
  }
  return EnsembleChannel{std::move(eta), RealKrausChannel(std::move(kraus)), std::move(phases)};
}

bool pure_convertible(const PureState& psi, const PureState& phi, double tol) {
  return overlap(phi) >= overlap(psi) - tol;
}

RealKrausChannel pure_conversion_channel(const PureState& psi, const PureState& phi) {
  if (!pure_convertible(psi, phi)) {
    throw ValidationError("convertible", "target state is strictly more imaginary than source");
  }
  const CanonicalForm src = canonical_form(psi);
  const CanonicalForm dst = canonical_form(phi);
  const std::size_t din = psi.dim();
  const std::size_t dout = phi.dim();

  const double x = src.x, y = dst.x;
  const double cx = std::sqrt(0.5 * (1.0 + x));
  const double sx = std::sqrt(0.5 * (1.0 - x));
  const double cy = std::sqrt(0.5 * (1.0 + y));
  const double sy = std::sqrt(0.5 * (1.0 - y));

  // Two branches in the canonical plane scale eta_x into eta_y; the split
  // (1 +- x/y)/2 makes the completeness sum exactly diagonal-one.
  const double ratio = (y < 1e-12) ? 1.0 : std::min(x / y, 1.0);
  const double t1 = std::sqrt(0.5 * (1.0 + ratio));
  const double m = std::sqrt(std::max(0.0, 0.5 * (1.0 - ratio)));

  std::vector<RealMatrix> kraus;
  RealMatrix k1(dout, din);
  k1(0, 0) = t1 * cy / cx;
  k1(1, 1) = t1 * ((sx > 1e-9) ? sy / sx : 1.0);
  kraus.push_back(std::move(k1));
  if (m > 1e-10) {
    // m/sx stays bounded: m^2/sx^2 = (y - x)/(y (1 - x)) <= 1/y.
    RealMatrix k2(dout, din);
    k2(0, 1) = m * cy / sx;
    k2(1, 0) = -m * sy / cx;
    kraus.push_back(std::move(k2));
  }
  // Extra input directions carry no amplitude of psi; route them anywhere.
  for (std::size_t a = 2; a < din; ++a) {
    RealMatrix ka(dout, din);
    ka(0, a) = 1.0;
    kraus.push_back(std::move(ka));
  }

  const RealMatrix out_rot = dst.rotation.transpose();
  std::vector<RealMatrix> rotated;
  rotated.reserve(kraus.size());
  for (const RealMatrix& k : kraus) rotated.push_back(out_rot * k * src.rotation);
  return RealKrausChannel(std::move(rotated));
}

QubitConvertibility qubit_convertible(const DensityMatrix& rho, const DensityMatrix& sigma,
                                      double tol) {
  if (rho.dim() != 2 || sigma.dim() != 2) {
    throw NotQubitError("qubit_convertible: both states must be qubits");
  }
  const auto monotones = [](const DensityMatrix& r) {
    const double im = r(0, 1).imag();
    const double re = r(0, 1).real();
    const double m1 = std::abs(im);
    const double prod = r(0, 0).real() * r(1, 1).real();
    const double den = prod - re * re;
    constexpr double kTiny = 1e-14;
    double m2 = 0.0;
    // PSD gives den >= im^2, so den ~ 0 forces im ~ 0; define 0/0 := 0
    // by continuity along real states.
    if (prod > kTiny && den > kTiny) m2 = std::min(im * im / den, 1.0);
    return std::pair<double, double>(m1, m2);
  };
  const auto [r1, r2] = monotones(rho);
  const auto [s1, s2] = monotones(sigma);
  QubitConvertibility out;
  out.m1_rho = r1;
  out.m1_sigma = s1;
  out.m2_rho = r2;
  out.m2_sigma = s2;
  out.ok = (r1 >= s1 - tol) && (r2 >= s2 - tol);
  return out;
}

RealKrausChannel random_real_channel(std::size_t d_in, std::size_t d_out, std::size_t n_kraus,
                                     std::uint64_t seed) {
  if (d_in == 0 || d_out == 0 || n_kraus == 0) {
    throw ParamOutOfRangeError("random_real_channel: dimensions must be positive");
  }
  const std::size_t rows = n_kraus * d_out;
  if (rows < d_in) {
    throw ParamOutOfRangeError("random_real_channel: n_kraus*d_out must be at least d_in");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<double>> cols(d_in, std::vector<double>(rows));
  for (auto& col : cols) {
    for (double& v : col) v = gauss(rng);
  }
  // Modified Gram-Schmidt, two passes; the result is a Haar isometry.
  for (std::size_t j = 0; j < d_in; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t jj = 0; jj < j; ++jj) {
        double c = 0.0;
        for (std::size_t i = 0; i < rows; ++i) c += cols[jj][i] * cols[j][i];
        for (std::size_t i = 0; i < rows; ++i) cols[j][i] -= c * cols[jj][i];
      }
    }
    double nrm2 = 0.0;
    for (double v : cols[j]) nrm2 += v * v;
    if (nrm2 < 1e-24) {
      // Practically unreachable for Gaussian draws; resample to stay safe.
      for (double& v : cols[j]) v = gauss(rng);
      --j;
      continue;
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    for (double& v : cols[j]) v *= inv;
  }

  std::vector<RealMatrix> kraus;
  kraus.reserve(n_kraus);
  for (std::size_t b = 0; b < n_kraus; ++b) {
    RealMatrix k(d_out, d_in);
    for (std::size_t r = 0; r < d_out; ++r) {
      for (std::size_t c = 0; c < d_in; ++c) k(r, c) = cols[c][b * d_out + r];
    }
    kraus.push_back(std::move(k));
  }
  return RealKrausChannel(std::move(kraus));
}

}  // namespace imag
