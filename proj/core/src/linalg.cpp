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

#include "imag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace imag {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatchError(std::string(op) + ": shape mismatch");
  }
}

double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  require_same_shape(*this, rhs, "add");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  require_same_shape(*this, rhs, "subtract");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatchError("multiply: inner dimensions differ");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) += aik * rhs(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx scale) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * scale;
  return out;
}

ComplexMatrix operator*(cplx scale, const ComplexMatrix& m) { return m * scale; }

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = std::conj(data_[k]);
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionMismatchError("trace: matrix not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const cplx& v : data_) sum += std::norm(v);
  return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::max_abs_imag() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v.imag()));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix ComplexMatrix::hermitized() const {
  if (!is_square()) throw DimensionMismatchError("hermitized: matrix not square");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out(i, i) = (*this)(i, i).real();
    for (std::size_t j = i + 1; j < cols_; ++j) {
      const cplx v = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatchError("multiply: inner dimensions differ");
  RealMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += aik * rhs(k, j);
    }
  return out;
}

ComplexMatrix RealMatrix::to_complex() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  return out;
}

double RealMatrix::orthogonality_residual() const {
  RealMatrix gram = transpose() * (*this);
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      worst = std::max(worst, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

Spectrum eig_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw DimensionMismatchError("eig_hermitian: matrix not square");
  if (!h.is_hermitian(1e-8)) throw NotHermitianError("eig_hermitian: input is not Hermitian");

  const std::size_t n = h.rows();
  ComplexMatrix a = h.hermitized();
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr double kConvergence = 1e-14;
  constexpr int kMaxSweeps = 100;

  bool converged = (n < 2) || offdiag_frobenius(a) < kConvergence;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const cplx phase = apq / b;  // e^{i phi}

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * b);
        double t;
        if (tau >= 0.0) {
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        } else {
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Plane rotation U: U(p,p)=c, U(p,q)=s*phase, U(q,p)=-s*conj(phase),
        // U(q,q)=c. Apply A <- U^dagger A U as column then row updates.
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
    converged = offdiag_frobenius(a) < kConvergence;
  }
  if (!converged) {
    throw NoConvergenceError("eig_hermitian: Jacobi sweep budget exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix func_psd(const ComplexMatrix& h, const std::function<double(double)>& g) {
  Spectrum spec = eig_hermitian(h);
  const std::size_t n = h.rows();
  if (!spec.eigenvalues.empty() && spec.eigenvalues.front() < -1e-8) {
    throw NotPSDError("func_psd: eigenvalue below -1e-8");
  }
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = std::max(spec.eigenvalues[k], 0.0);
    const double glam = g(lam);
    if (glam == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = spec.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += glam * vik * std::conj(spec.eigenvectors(j, k));
      }
    }
  }
  return out.hermitized();
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  Spectrum spec = eig_hermitian(rho);
  double entropy = 0.0;
  for (double lam : spec.eigenvalues) {
    if (lam > 0.0) entropy -= lam * std::log2(lam);
  }
  return std::max(entropy, 0.0);
}

double root_fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  require_same_shape(rho, sigma, "root_fidelity");
  // sqrt is infinitely steep at 0, so spectral noise (~1e-16) of
  // rank-deficient inputs would surface at the 1e-8 scale. Eigenvalues at or
  // below the floor are treated as exact zeros.
  static constexpr double kEigFloor = 1e-12;
  const ComplexMatrix sqrt_rho =
      func_psd(rho, [](double x) { return x > kEigFloor ? std::sqrt(x) : 0.0; });
  const ComplexMatrix inner = (sqrt_rho * sigma * sqrt_rho).hermitized();
  Spectrum spec = eig_hermitian(inner);
  double f = 0.0;
  for (double lam : spec.eigenvalues) {
    if (lam > kEigFloor) f += std::sqrt(lam);
  }
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace imag
