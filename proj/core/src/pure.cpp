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

#include "imag/pure.hpp"

#include <algorithm>
#include <cmath>

namespace imag {

namespace {

constexpr double kPivotTol = 1e-10;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Removes the components of v along the (orthonormal) rows collected so far.
// Two projection passes keep the completion orthogonal to working precision.
void orthogonalize(std::vector<double>& v, const std::vector<std::vector<double>>& rows) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& r : rows) {
      const double c = dot(v, r);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * r[i];
    }
  }
}

}  // namespace

double overlap(const PureState& psi) {
  cplx c = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) c += psi[i] * psi[i];
  return std::min(std::abs(c), 1.0);
}

double pure_measure(const MonotoneF& f, const PureState& psi) { return f(overlap(psi)); }

double overlap_via_im_parts(const PureState& psi) {
  const std::size_t d = psi.dim();
  double sum = 0.0;
  for (std::size_t m = 0; m < d; ++m) {
    for (std::size_t n = 0; n < d; ++n) {
      if (m == n) continue;
      const double im = (psi[m] * std::conj(psi[n])).imag();
      sum += im * im;
    }
  }
  const double radicand = 1.0 - 2.0 * sum;
  if (radicand < -1e-10) {
    throw NegativeRadicandError("overlap_via_im_parts: radicand " + std::to_string(radicand));
  }
  return std::sqrt(std::max(radicand, 0.0));
}

CanonicalForm canonical_form(const PureState& psi) {
  const std::size_t d = psi.dim();
  if (d < 2) throw DimensionMismatchError("canonical_form: requires dim >= 2");

  cplx c = 0.0;
  for (std::size_t i = 0; i < d; ++i) c += psi[i] * psi[i];
  const double x = std::min(std::abs(c), 1.0);
  const double phase = (std::abs(c) > 0.0) ? -0.5 * std::arg(c) : 0.0;

  // e^{i phase} psi = a + i b with a, b real, a.b = 0,
  // ||a||^2 = (1+x)/2, ||b||^2 = (1-x)/2.
  const cplx rot = std::polar(1.0, phase);
  std::vector<double> a(d), b(d);
  for (std::size_t i = 0; i < d; ++i) {
    const cplx v = rot * psi[i];
    a[i] = v.real();
    b[i] = v.imag();
  }

  std::vector<std::vector<double>> rows;
  rows.reserve(d);
  {
    const double na = norm(a);  // >= 1/sqrt(2), never degenerate
    std::vector<double> r = a;
    for (double& v : r) v /= na;
    rows.push_back(std::move(r));
  }
  if (norm(b) > kPivotTol) {
    std::vector<double> r = b;
    orthogonalize(r, rows);
    const double nb = norm(r);
    for (double& v : r) v /= nb;
    rows.push_back(std::move(r));
  }
  // Complete with standard basis vectors, Gram-Schmidt with pivoting.
  for (std::size_t k = 0; k < d && rows.size() < d; ++k) {
    std::vector<double> r(d, 0.0);
    r[k] = 1.0;
    orthogonalize(r, rows);
    const double nr = norm(r);
    if (nr <= kPivotTol) continue;
    for (double& v : r) v /= nr;
    rows.push_back(std::move(r));
  }
  if (rows.size() != d) {
    throw NoConvergenceError("canonical_form: basis completion failed");
  }

  CanonicalForm out;
  out.x = x;
  out.phase = phase;
  out.rotation = RealMatrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out.rotation(i, j) = rows[i][j];
  return out;
}

}  // namespace imag
