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

#include <cmath>

#include "doctest.h"
#include "imag/linalg.hpp"
#include "imag/states.hpp"

using imag::ComplexMatrix;
using imag::cplx;

TEST_CASE("eig_hermitian on diagonal matrices") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  const imag::Spectrum s = imag::eig_hermitian(m);
  CHECK(s.eigenvalues[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("eig_hermitian on Pauli Y") {
  ComplexMatrix y(2, 2);
  y(0, 1) = cplx(0.0, -1.0);
  y(1, 0) = cplx(0.0, 1.0);
  const imag::Spectrum s = imag::eig_hermitian(y);
  CHECK(s.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian identity d=3") {
  ComplexMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id(i, i) = 1.0;
  const imag::Spectrum s = imag::eig_hermitian(id);
  for (double lam : s.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian eigenvector residual on random hermitian") {
  const imag::DensityMatrix rho = imag::sample_density(6, 6, 91);
  const ComplexMatrix m = rho.matrix();
  const imag::Spectrum s = imag::eig_hermitian(m);
  for (std::size_t k = 0; k < 6; ++k) {
    // residual of M v = lambda v, column k
    double r = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      cplx mv = 0.0;
      for (std::size_t j = 0; j < 6; ++j) mv += m(i, j) * s.eigenvectors(j, k);
      r = std::max(r, std::abs(mv - s.eigenvalues[k] * s.eigenvectors(i, k)));
    }
    CHECK(r <= 1e-10);
  }
}

TEST_CASE("eig_hermitian rejects non-hermitian input") {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;  // m(1,0) stays 0
  CHECK_THROWS_AS(imag::eig_hermitian(m), imag::NotHermitianError);
}

TEST_CASE("func_psd square root") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 4.0;
  m(1, 1) = 9.0;
  const ComplexMatrix r = imag::func_psd(m, [](double x) { return std::sqrt(x); });
  CHECK(r(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(std::abs(r(0, 1)) <= 1e-12);
}

TEST_CASE("func_psd rejects clearly negative spectra") {
  ComplexMatrix m(2, 2);
  m(0, 0) = -0.5;
  m(1, 1) = 1.5;
  CHECK_THROWS_AS(imag::func_psd(m, [](double x) { return std::sqrt(x); }),
                  imag::NotPSDError);
}

TEST_CASE("von_neumann_entropy base-2 oracle") {
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.25;
  m(1, 1) = 0.75;
  CHECK(imag::von_neumann_entropy(m) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("root_fidelity basics") {
  const imag::DensityMatrix rho = imag::sample_density(3, 2, 17);
  CHECK(imag::root_fidelity(rho.matrix(), rho.matrix()) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // pure states: F = |<psi|phi>|
  const imag::PureState a = imag::sample_pure(3, 5);
  const imag::PureState b = imag::sample_pure(3, 6);
  cplx ip = 0.0;
  for (std::size_t i = 0; i < 3; ++i) ip += std::conj(a[i]) * b[i];
  CHECK(imag::root_fidelity(a.projector(), b.projector()) ==
        doctest::Approx(std::abs(ip)).epsilon(1e-9));
}

TEST_CASE("RealMatrix orthogonality residual") {
  imag::RealMatrix id = imag::RealMatrix::identity(4);
  CHECK(id.orthogonality_residual() <= 1e-15);
}
