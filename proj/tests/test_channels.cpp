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
#include "imag/channels.hpp"
#include "imag/monotone.hpp"
#include "imag/pure.hpp"
#include "imag/roof.hpp"
#include "imag/states.hpp"

using imag::ComplexMatrix;
using imag::cplx;
using imag::DensityMatrix;
using imag::PureState;
using imag::RealKrausChannel;
using imag::RealMatrix;

namespace {

PureState max_imaginary_qubit() {
  const double s = 1.0 / std::sqrt(2.0);
  return PureState({cplx(s, 0.0), cplx(0.0, s)});
}

PureState phi_eta(double eta) {
  return PureState({cplx(std::sqrt(eta), 0.0), cplx(0.0, std::sqrt(1.0 - eta))});
}

DensityMatrix qubit(double p00, cplx b) {
  ComplexMatrix m(2, 2);
  m(0, 0) = p00;
  m(1, 1) = 1.0 - p00;
  m(0, 1) = b;
  m(1, 0) = std::conj(b);
  return DensityMatrix::validated(m);
}

}  // namespace

TEST_CASE("channel constructor enforces structure") {
  RealMatrix id = RealMatrix::identity(2);
  CHECK_NOTHROW(RealKrausChannel({id}));

  RealMatrix half = RealMatrix::identity(2);
  half(0, 0) = half(1, 1) = 1.0 / std::sqrt(2.0);
  CHECK_NOTHROW(RealKrausChannel({half, half}));

  // incomplete Kraus set
  RealMatrix bad = RealMatrix::identity(2);
  bad(1, 1) = 0.5;
  CHECK_THROWS_AS(RealKrausChannel({bad}), imag::ValidationError);

  CHECK_THROWS_AS(RealKrausChannel({}), imag::ValidationError);

  RealMatrix tall(3, 2);
  CHECK_THROWS_AS(RealKrausChannel({id, tall}), imag::DimensionMismatchError);
}

TEST_CASE("from_complex rejects imaginary entries, validate_channel reports them") {
  ComplexMatrix k(2, 2);
  k(0, 0) = 1.0;
  k(1, 1) = cplx(0.0, 1.0);
  CHECK_THROWS_AS(RealKrausChannel::from_complex({k}), imag::ValidationError);

  const imag::ChannelValidation bad = imag::validate_channel({k});
  CHECK(!bad.ok);
  CHECK(bad.violation == "real_entries");
  CHECK(bad.max_imag_entry == doctest::Approx(1.0));

  ComplexMatrix good(2, 2);
  good(0, 0) = 1.0;
  good(1, 1) = 1.0;
  const imag::ChannelValidation ok = imag::validate_channel({good});
  CHECK(ok.ok);
  CHECK(ok.completeness_residual <= 1e-12);

  ComplexMatrix incomplete(2, 2);
  incomplete(0, 0) = 1.0;
  incomplete(1, 1) = 0.7;
  const imag::ChannelValidation inc = imag::validate_channel({incomplete});
  CHECK(!inc.ok);
  CHECK(inc.violation == "completeness");
}

TEST_CASE("apply and branches reconstruct the mixture") {
  std::uint64_t seed = 2100;
  for (int rep = 0; rep < 6; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const DensityMatrix rho = imag::sample_density(d, d, seed);
    const RealKrausChannel phi = imag::random_real_channel(d, d, 3, seed + 31);
    const DensityMatrix out = phi.apply(rho);
    const std::vector<imag::ChannelBranch> br = phi.branches(rho);
    double psum = 0.0;
    ComplexMatrix acc(d, d);
    for (const imag::ChannelBranch& b : br) {
      psum += b.p;
      acc = acc + b.state.matrix() * cplx(b.p, 0.0);
    }
    CHECK(psum == doctest::Approx(1.0).epsilon(1e-9));
    CHECK((acc - out.matrix()).max_abs() <= 1e-9);
    ++seed;
  }
}

TEST_CASE("free-state closure") {
  std::uint64_t seed = 2200;
  for (int rep = 0; rep < 6; ++rep) {
    ComplexMatrix m(3, 3);
    // random real diagonal-dominant state
    const DensityMatrix base = imag::sample_density(3, 3, seed++);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = base(i, j).real();
    }
    const DensityMatrix real_rho = DensityMatrix::validated(m.hermitized(), 1e-6);
    const RealKrausChannel phi = imag::random_real_channel(3, 3, 2, seed + 77);
    CHECK(phi.apply(real_rho).matrix().max_abs_imag() <= 1e-10);
  }
}

TEST_CASE("ensemble_channel single branch reproduces the state") {
  const PureState psi = imag::sample_pure(3, 251);
  const imag::EnsembleChannel ec = imag::ensemble_channel(imag::Ensemble({1.0}, {psi}));
  CHECK(ec.channel.size() == 1);
  const DensityMatrix out = ec.channel.apply(DensityMatrix::from_pure(ec.eta));
  CHECK(imag::approx_equal(out, DensityMatrix::from_pure(psi), 1e-9));
}

TEST_CASE("ensemble_channel end-to-end reconstruction") {
  std::uint64_t seed = 2300;
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const std::size_t n = 2 + rep % 3;
    std::vector<double> w;
    std::vector<PureState> states;
    double tot = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w.push_back(1.0 + ((seed + j) % 3));
      tot += w.back();
      states.push_back(imag::sample_pure(d, seed + 10 * j));
    }
    for (double& v : w) v /= tot;
    const imag::Ensemble ens(w, states);
    const imag::EnsembleChannel ec = imag::ensemble_channel(ens);

    // eta has the canonical two-coordinate form with the mean overlap
    double xbar = 0.0;
    for (std::size_t j = 0; j < n; ++j) xbar += w[j] * imag::overlap(states[j]);
    CHECK(imag::overlap(ec.eta) == doctest::Approx(xbar).epsilon(1e-9));

    // branch j lands on psi_j up to the recorded phase
    const DensityMatrix eta_state = DensityMatrix::from_pure(ec.eta);
    const std::vector<imag::ChannelBranch> br = ec.channel.branches(eta_state);
    REQUIRE(br.size() == n);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(br[j].p == doctest::Approx(w[j]).epsilon(1e-8));
      CHECK(imag::approx_equal(br[j].state, DensityMatrix::from_pure(states[j]), 1e-8));
    }
    CHECK(imag::approx_equal(ec.channel.apply(eta_state), ens.mix(), 1e-9));
    ++seed;
  }
}

TEST_CASE("pure_convertible follows the overlap order") {
  CHECK(imag::pure_convertible(max_imaginary_qubit(), phi_eta(0.3)));
  CHECK(imag::pure_convertible(max_imaginary_qubit(), max_imaginary_qubit()));
  CHECK(!imag::pure_convertible(PureState({cplx(1.0, 0.0), cplx(0.0, 0.0)}),
                                max_imaginary_qubit()));
  // eta = 0.3 has overlap 0.4; eta = 0.4 has overlap 0.2: conversion must fail
  CHECK(!imag::pure_convertible(phi_eta(0.3), phi_eta(0.4)));
  CHECK(imag::pure_convertible(phi_eta(0.4), phi_eta(0.3)));
}

TEST_CASE("pure_conversion_channel is sound") {
  std::uint64_t seed = 2400;
  int built = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t d = 2 + rep % 3;
    const PureState psi = imag::sample_pure(d, seed++);
    const PureState phi = imag::sample_pure(d, seed++);
    if (!imag::pure_convertible(psi, phi)) {
      // overlap criterion violated: geometric pure measure must order the other way
      const imag::MonotoneF geo = imag::MonotoneF::builtin("geometric");
      CHECK(imag::pure_measure(geo, phi) > imag::pure_measure(geo, psi));
      continue;
    }
    ++built;
    const RealKrausChannel ch = imag::pure_conversion_channel(psi, phi);
    const DensityMatrix out = ch.apply(DensityMatrix::from_pure(psi));
    CHECK(imag::approx_equal(out, DensityMatrix::from_pure(phi), 1e-9));
  }
  CHECK(built > 0);

  // also exercise the canonical pair from the examples
  const RealKrausChannel ch =
      imag::pure_conversion_channel(max_imaginary_qubit(), phi_eta(0.3));
  const DensityMatrix out = ch.apply(DensityMatrix::from_pure(max_imaginary_qubit()));
  CHECK(imag::approx_equal(out, DensityMatrix::from_pure(phi_eta(0.3)), 1e-9));

  CHECK_THROWS_AS(
      imag::pure_conversion_channel(PureState({cplx(1.0, 0.0), cplx(0.0, 0.0)}),
                                    max_imaginary_qubit()),
      imag::ValidationError);
}

TEST_CASE("qubit_convertible evaluates the two-monotone conjunction") {
  const DensityMatrix strong = qubit(0.5, cplx(0.05, 0.3));
  const DensityMatrix weak = qubit(0.5, cplx(0.05, 0.1));
  const imag::QubitConvertibility down = imag::qubit_convertible(strong, weak);
  CHECK(down.ok);
  CHECK(down.m1_rho == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(down.m1_sigma == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(down.m2_rho >= down.m2_sigma);

  const imag::QubitConvertibility up = imag::qubit_convertible(weak, strong);
  CHECK(!up.ok);

  const imag::QubitConvertibility refl = imag::qubit_convertible(strong, strong);
  CHECK(refl.ok);

  // real source cannot reach an imaginary target
  CHECK(!imag::qubit_convertible(qubit(0.6, cplx(0.2, 0.0)), weak).ok);

  // pure imaginary state dominates everything
  const DensityMatrix maximal = DensityMatrix::from_pure(max_imaginary_qubit());
  CHECK(imag::qubit_convertible(maximal, strong).ok);
  CHECK(imag::qubit_convertible(maximal, weak).ok);
  CHECK(imag::qubit_convertible(maximal, maximal).m2_rho == doctest::Approx(1.0));

  CHECK_THROWS_AS(imag::qubit_convertible(imag::sample_density(3, 2, 9), weak),
                  imag::NotQubitError);
}

TEST_CASE("qubit convertibility is necessary for roof domination") {
  // for convertible pairs every registry roof measure must be ordered
  const DensityMatrix rho = qubit(0.5, cplx(0.05, 0.3));
  const DensityMatrix sigma = qubit(0.45, cplx(0.1, 0.12));
  REQUIRE(imag::qubit_convertible(rho, sigma).ok);
  imag::RoofOptions opts;
  opts.n_starts = 8;
  opts.seed = 33;
  for (const imag::MonotoneF& f : imag::registry_defaults()) {
    const double vr = imag::convex_roof(f, rho, opts).value;
    const double vs = imag::convex_roof(f, sigma, opts).value;
    CHECK(vr >= vs - 2e-5);
  }
}

TEST_CASE("random_real_channel contract") {
  const RealKrausChannel one = imag::random_real_channel(3, 3, 1, 9001);
  CHECK(one.size() == 1);
  // single Kraus of a complete channel is orthogonal
  CHECK(one.kraus()[0].orthogonality_residual() <= 1e-10);

  std::uint64_t seed = 2500;
  for (int rep = 0; rep < 8; ++rep) {
    const RealKrausChannel ch = imag::random_real_channel(4, 3, 2, seed++);
    CHECK(ch.dim_in() == 4);
    CHECK(ch.dim_out() == 3);
    std::vector<ComplexMatrix> ks;
    for (const RealMatrix& k : ch.kraus()) ks.push_back(k.to_complex());
    CHECK(imag::validate_channel(ks).completeness_residual <= 1e-10);
  }

  // determinism
  const RealKrausChannel a = imag::random_real_channel(3, 3, 2, 4242);
  const RealKrausChannel b = imag::random_real_channel(3, 3, 2, 4242);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) CHECK(a.kraus()[j](r, c) == b.kraus()[j](r, c));
    }
  }

  CHECK_THROWS_AS(imag::random_real_channel(5, 2, 2, 1), imag::ParamOutOfRangeError);
  CHECK_THROWS_AS(imag::random_real_channel(0, 2, 2, 1), imag::ParamOutOfRangeError);
}
