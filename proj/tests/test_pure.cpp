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
#include <vector>

#include "doctest.h"
#include "imag/monotone.hpp"
#include "imag/pure.hpp"
#include "imag/states.hpp"

using imag::cplx;
using imag::PureState;

namespace {

PureState max_imaginary_qubit() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({cplx(s, 0.0), cplx(0.0, s)});
}

PureState phi_eta(double eta) {
  return PureState({cplx(std::sqrt(eta), 0.0), cplx(0.0, std::sqrt(1.0 - eta))});
}

// largest |<phi|psi>|^2 over real unit vectors phi, by dense grid plus
// local refinement; d = 2 or 3 only
double best_real_overlap_sq(const PureState& psi) {
  const std::size_t d = psi.dim();
  auto value = [&](const std::vector<double>& phi) {
    cplx ip = 0.0;
    for (std::size_t i = 0; i < d; ++i) ip += phi[i] * psi[i];
    return std::norm(ip);
  };
  double best = 0.0;
  std::vector<double> best_phi(d);
  const double pi = 3.14159265358979323846;
  if (d == 2) {
    for (int i = 0; i < 720; ++i) {
      const double t = pi * i / 720.0;
      std::vector<double> phi = {std::cos(t), std::sin(t)};
      if (value(phi) > best) {
        best = value(phi);
        best_phi = phi;
      }
    }
  } else {
    for (int i = 0; i < 120; ++i) {
      for (int j = 0; j < 240; ++j) {
        const double a = pi * i / 120.0, b = pi * j / 120.0;
        std::vector<double> phi = {std::cos(a), std::sin(a) * std::cos(b),
                                   std::sin(a) * std::sin(b)};
        if (value(phi) > best) {
          best = value(phi);
          best_phi = phi;
        }
      }
    }
  }
  // local refinement: coordinate descent with renormalization
  for (double step = 0.01; step > 1e-8; step *= 0.5) {
    for (std::size_t i = 0; i < d; ++i) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> cand = best_phi;
        cand[i] += sgn * step;
        double n = 0.0;
        for (double v : cand) n += v * v;
        n = std::sqrt(n);
        for (double& v : cand) v /= n;
        if (value(cand) > best) {
          best = value(cand);
          best_phi = cand;
        }
      }
    }
  }
  return best;
}

}  // namespace

TEST_CASE("overlap pinned values") {
  CHECK(imag::overlap(max_imaginary_qubit()) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(imag::overlap(PureState({cplx(0.6, 0.0), cplx(0.8, 0.0)})) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(imag::overlap(phi_eta(0.3)) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(imag::overlap(phi_eta(0.45)) == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("overlap is invariant under global phase and real rotation") {
  const PureState psi = imag::sample_pure(4, 101);
  const double x = imag::overlap(psi);

  std::vector<cplx> rotated = psi.amplitudes();
  const cplx phase = std::polar(1.0, 0.73);
  for (cplx& a : rotated) a *= phase;
  CHECK(imag::overlap(PureState(rotated)) == doctest::Approx(x).epsilon(1e-12));

  // real Givens rotation on coordinates (0, 2)
  std::vector<cplx> g = psi.amplitudes();
  const double c = std::cos(0.4), s = std::sin(0.4);
  const cplx a0 = g[0], a2 = g[2];
  g[0] = c * a0 - s * a2;
  g[2] = s * a0 + c * a2;
  CHECK(imag::overlap(PureState(g)) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("overlap_via_im_parts identity across dimensions") {
  std::uint64_t seed = 400;
  for (std::size_t d = 2; d <= 8; ++d) {
    for (int rep = 0; rep < 8; ++rep) {
      const PureState psi = imag::sample_pure(d, seed++);
      CHECK(std::abs(imag::overlap(psi) - imag::overlap_via_im_parts(psi)) <= 1e-10);
    }
  }
  CHECK(imag::overlap_via_im_parts(max_imaginary_qubit()) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pure_measure matches f(overlap) and the l2 row matches Im parts") {
  const imag::MonotoneF geo = imag::MonotoneF::builtin("geometric");
  CHECK(imag::pure_measure(geo, max_imaginary_qubit()) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(imag::pure_measure(geo, PureState({cplx(1.0, 0.0), cplx(0.0, 0.0)})) == 0.0);

  const imag::MonotoneF l2 = imag::MonotoneF::builtin("l2");
  std::uint64_t seed = 500;
  for (int rep = 0; rep < 10; ++rep) {
    const PureState psi = imag::sample_pure(3, seed++);
    const imag::ComplexMatrix proj = psi.projector();
    double sum = 0.0;
    for (std::size_t m = 0; m < 3; ++m) {
      for (std::size_t n = 0; n < 3; ++n) {
        if (m != n) sum += proj(m, n).imag() * proj(m, n).imag();
      }
    }
    CHECK(imag::pure_measure(l2, psi) == doctest::Approx(std::sqrt(sum)).epsilon(1e-10));
  }
}

TEST_CASE("geometric pure measure equals one minus the best real overlap") {
  std::uint64_t seed = 600;
  for (std::size_t d : {std::size_t{2}, std::size_t{3}}) {
    for (int rep = 0; rep < 4; ++rep) {
      const PureState psi = imag::sample_pure(d, seed++);
      const double direct = imag::pure_measure(imag::MonotoneF::builtin("geometric"), psi);
      const double brute = 1.0 - best_real_overlap_sq(psi);
      CHECK(direct == doctest::Approx(brute).epsilon(5e-5));
    }
  }
}

TEST_CASE("canonical_form invariants") {
  std::uint64_t seed = 700;
  for (std::size_t d : {std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
    for (int rep = 0; rep < 5; ++rep) {
      const PureState psi = imag::sample_pure(d, seed++);
      const imag::CanonicalForm cf = imag::canonical_form(psi);
      CHECK(cf.rotation.orthogonality_residual() <= 1e-10);
      CHECK(cf.x == doctest::Approx(imag::overlap(psi)).epsilon(1e-10));

      // O (e^{i phase} psi) should hit the canonical vector
      const cplx ph = std::polar(1.0, cf.phase);
      std::vector<cplx> img(d, 0.0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) img[i] += cf.rotation(i, j) * (ph * psi[j]);
      }
      const double cx = std::sqrt((1.0 + cf.x) / 2.0);
      const double sx = std::sqrt((1.0 - cf.x) / 2.0);
      CHECK(std::abs(img[0] - cplx(cx, 0.0)) <= 1e-9);
      CHECK(std::abs(img[1] - cplx(0.0, sx)) <= 1e-9);
      for (std::size_t i = 2; i < d; ++i) CHECK(std::abs(img[i]) <= 1e-9);
    }
  }
}

TEST_CASE("canonical_form handles boundary states") {
  const imag::CanonicalForm real_cf =
      imag::canonical_form(PureState({cplx(1.0, 0.0), cplx(0.0, 0.0)}));
  CHECK(real_cf.x == doctest::Approx(1.0).epsilon(1e-12));

  const imag::CanonicalForm max_cf = imag::canonical_form(max_imaginary_qubit());
  CHECK(max_cf.x == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(imag::canonical_form(PureState({cplx(1.0, 0.0)})),
                  imag::DimensionMismatchError);
}
