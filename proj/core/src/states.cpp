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

#include "imag/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace imag {

namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kBranchCutoff = 1e-14;

// Positive eigenvalues of rho in descending order with their eigenvectors.
struct PositiveSpectrum {
  std::vector<double> values;
  std::vector<std::vector<cplx>> vectors;
};

PositiveSpectrum positive_spectrum(const DensityMatrix& rho) {
  Spectrum spec = eig_hermitian(rho.matrix());
  PositiveSpectrum out;
  const std::size_t d = rho.dim();
  for (std::size_t k = d; k-- > 0;) {  // descending
    if (spec.eigenvalues[k] <= kRankCutoff) break;
    out.values.push_back(spec.eigenvalues[k]);
    std::vector<cplx> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = spec.eigenvectors(i, k);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace

PureState::PureState(std::vector<cplx> amplitudes, double tol) : amp_(std::move(amplitudes)) {
  if (amp_.empty()) throw ValidationError("shape", "empty amplitude vector");
  double norm2 = 0.0;
  for (const cplx& a : amp_) norm2 += std::norm(a);
  const double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > tol) {
    throw ValidationError("unit_norm", "norm deviates from 1 by " + std::to_string(norm - 1.0));
  }
  for (cplx& a : amp_) a /= norm;
}

ComplexMatrix PureState::projector() const {
  const std::size_t d = dim();
  ComplexMatrix p(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p(i, j) = amp_[i] * std::conj(amp_[j]);
  return p;
}

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m, double tol) {
  if (!m.is_square() || m.rows() == 0) {
    throw ValidationError("shape", "density matrix must be square and nonempty");
  }
  if (!m.is_hermitian(tol)) {
    throw ValidationError("hermitian", "matrix is not Hermitian at tolerance");
  }
  ComplexMatrix h = m.hermitized();
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw ValidationError("trace_one", "trace deviates from 1 by " + std::to_string(tr - 1.0));
  }
  h = h * cplx(1.0 / tr, 0.0);
  Spectrum spec = eig_hermitian(h);
  if (spec.eigenvalues.front() < -1e-9) {
    throw ValidationError("positive_semidefinite",
                          "smallest eigenvalue " + std::to_string(spec.eigenvalues.front()));
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector().hermitized());
}

Ensemble::Ensemble(std::vector<double> weights, std::vector<PureState> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  if (weights_.empty() || weights_.size() != states_.size()) {
    throw ValidationError("shape", "ensemble weights/states size mismatch");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (w <= 0.0) throw ValidationError("positive_weights", "nonpositive ensemble weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw ValidationError("weights_sum_one", "weights sum to " + std::to_string(sum));
  }
  const std::size_t d = states_.front().dim();
  for (const PureState& s : states_) {
    if (s.dim() != d) throw ValidationError("shape", "ensemble states have mixed dimensions");
  }
}

DensityMatrix Ensemble::mix() const {
  const std::size_t d = states_.front().dim();
  ComplexMatrix acc(d, d);
  for (std::size_t i = 0; i < size(); ++i) {
    acc = acc + states_[i].projector() * cplx(weights_[i], 0.0);
  }
  return DensityMatrix::validated(acc, 1e-8);
}

PureState conjugate(const PureState& psi) {
  std::vector<cplx> amp(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) amp[i] = std::conj(psi[i]);
  return PureState(std::move(amp));
}

DensityMatrix conjugate(const DensityMatrix& rho) {
  return DensityMatrix::validated(rho.matrix().conj(), 1e-8);
}

std::pair<RealMatrix, RealMatrix> real_imag_parts(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  RealMatrix re(d, d), im(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      re(i, j) = rho(i, j).real();
      im(i, j) = rho(i, j).imag();
    }
  }
  return {re, im};
}

bool is_real_state(const DensityMatrix& rho, double tol) {
  return rho.matrix().max_abs_imag() <= tol;
}

DensityMatrix direct_sum(double p, const DensityMatrix& rho1, const DensityMatrix& rho2) {
  if (p < 0.0 || p > 1.0) throw ParamOutOfRangeError("direct_sum: p must lie in [0, 1]");
  const std::size_t d1 = rho1.dim(), d2 = rho2.dim();
  ComplexMatrix out(d1 + d2, d1 + d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d1; ++j) out(i, j) = p * rho1(i, j);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j) out(d1 + i, d1 + j) = (1.0 - p) * rho2(i, j);
  return DensityMatrix::validated(out, 1e-8);
}

PureState sample_pure(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw ParamOutOfRangeError("sample_pure: dim must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amp(dim);
  double norm2 = 0.0;
  do {
    for (std::size_t i = 0; i < dim; ++i) {
      amp[i] = cplx(gauss(rng), gauss(rng));
      norm2 += std::norm(amp[i]);
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amp) a *= inv;
  return PureState(std::move(amp));
}

DensityMatrix sample_density(std::size_t dim, std::size_t rank, std::uint64_t seed) {
  if (dim == 0 || rank == 0 || rank > dim) {
    throw ParamOutOfRangeError("sample_density: need 1 <= rank <= dim");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  // Purification on dim x rank, then trace out the second factor.
  std::vector<cplx> psi(dim * rank);
  double norm2 = 0.0;
  for (cplx& a : psi) {
    a = cplx(gauss(rng), gauss(rng));
    norm2 += std::norm(a);
  }
  ComplexMatrix rho(dim, dim);
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t n = 0; n < dim; ++n) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < rank; ++k) acc += psi[m * rank + k] * std::conj(psi[n * rank + k]);
      rho(m, n) = acc / norm2;
    }
  }
  return DensityMatrix::validated(rho, 1e-8);
}

std::size_t numerical_rank(const DensityMatrix& rho) {
  Spectrum spec = eig_hermitian(rho.matrix());
  std::size_t r = 0;
  for (double lam : spec.eigenvalues) {
    if (lam > kRankCutoff) ++r;
  }
  return r;
}

Ensemble hjw_decompositions(const DensityMatrix& rho, const ComplexMatrix& mixing) {
  const PositiveSpectrum spec = positive_spectrum(rho);
  const std::size_t r = spec.values.size();
  const std::size_t m = mixing.rows();
  if (mixing.cols() != r) {
    throw RankMismatchError("hjw_decompositions: mixing has " + std::to_string(mixing.cols()) +
                            " columns, rank of rho is " + std::to_string(r));
  }
  if (m < r) throw NotIsometryError("hjw_decompositions: mixing has fewer rows than columns");
  ComplexMatrix gram = mixing.adjoint() * mixing;
  double residual = 0.0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      residual = std::max(residual, std::abs(gram(i, j) - (i == j ? cplx(1.0) : cplx(0.0))));
  if (residual > 1e-8) {
    throw NotIsometryError("hjw_decompositions: columns not orthonormal, residual " +
                           std::to_string(residual));
  }

  const std::size_t d = rho.dim();
  std::vector<double> weights;
  std::vector<PureState> states;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<cplx> branch(d, cplx(0.0));
    for (std::size_t j = 0; j < r; ++j) {
      const cplx coeff = mixing(i, j) * std::sqrt(spec.values[j]);
      if (coeff == cplx(0.0)) continue;
      for (std::size_t a = 0; a < d; ++a) branch[a] += coeff * spec.vectors[j][a];
    }
    double p = 0.0;
    for (const cplx& a : branch) p += std::norm(a);
    if (p < kBranchCutoff) continue;
    const double inv = 1.0 / std::sqrt(p);
    for (cplx& a : branch) a *= inv;
    weights.push_back(p);
    states.emplace_back(std::move(branch));
  }
  // Renormalize against the rounding drift of dropped branches.
  double sum = 0.0;
  for (double w : weights) sum += w;
  for (double& w : weights) w /= sum;
  return Ensemble(std::move(weights), std::move(states));
}

ComplexMatrix mixing_from_ensemble(const DensityMatrix& rho, const Ensemble& ensemble,
                                   double tol) {
  if (!approx_equal(ensemble.mix(), rho, tol)) {
    throw ValidationError("ensemble_mix", "ensemble does not reproduce rho at tolerance");
  }
  const PositiveSpectrum spec = positive_spectrum(rho);
  const std::size_t r = spec.values.size();
  const std::size_t m = ensemble.size();
  const std::size_t d = rho.dim();
  ComplexMatrix mix(m, r);
  for (std::size_t i = 0; i < m; ++i) {
    const double scale = std::sqrt(ensemble.weight(i));
    for (std::size_t j = 0; j < r; ++j) {
      cplx inner = 0.0;  // <v_j | psi~_i>
      for (std::size_t a = 0; a < d; ++a) {
        inner += std::conj(spec.vectors[j][a]) * ensemble.state(i)[a];
      }
      mix(i, j) = scale * inner / std::sqrt(spec.values[j]);
    }
  }
  return mix;
}

bool approx_equal(const DensityMatrix& a, const DensityMatrix& b, double tol) {
  if (a.dim() != b.dim()) return false;
  return (a.matrix() - b.matrix()).max_abs() <= tol;
}

}  // namespace imag
