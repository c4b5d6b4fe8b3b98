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
#include "imag/monotone.hpp"
#include "imag/nogo.hpp"
#include "imag/pure.hpp"
#include "imag/roof.hpp"
#include "imag/states.hpp"

using imag::DensityMatrix;
using imag::MonotoneF;

namespace {

imag::RoofOptions search_opts() {
  imag::RoofOptions o;
  o.n_starts = 4;
  o.seed = 77;
  return o;
}

}  // namespace

TEST_CASE("build_states structure") {
  const auto [rho, sigma] = imag::build_states(0.3, 0.05, 0.1);
  CHECK(rho.dim() == 4);
  CHECK(sigma.dim() == 4);
  CHECK(imag::numerical_rank(sigma) == 1);

  // block weights and the psi2 overlap
  CHECK(std::abs(rho(0, 0).real() - 0.15) <= 1e-12);
  CHECK(std::abs(rho(1, 1).real() - 0.15) <= 1e-12);
  CHECK(std::abs(rho(2, 2).real() - 0.7 * 0.05) <= 1e-12);
  CHECK(std::abs(rho(3, 3).real() - 0.7 * 0.95) <= 1e-12);
  CHECK(std::abs(rho(0, 2)) <= 1e-15);

  CHECK_THROWS_AS(imag::build_states(0.0, 0.05, 0.1), imag::ParamOutOfRangeError);
  CHECK_THROWS_AS(imag::build_states(0.3, 0.55, 0.1), imag::ParamOutOfRangeError);
  CHECK_THROWS_AS(imag::build_states(0.3, 0.05, 0.5), imag::ParamOutOfRangeError);
}

TEST_CASE("fk_measure_direct closed form and optimizer agreement") {
  const auto [rho, sigma] = imag::build_states(0.4, 0.1, 0.2);
  const double k = 0.4;
  const MonotoneF fk = MonotoneF::builtin("fk", {k});
  // p1 fk(0) + p2 fk(1-2 lambda) with fk(0)=1, fk(0.8)=min(0.2/0.4,1)=0.5
  const double expected = 0.4 * 1.0 + 0.6 * 0.5;
  CHECK(imag::fk_measure_direct(rho, k) == doctest::Approx(expected).epsilon(1e-12));

  const double via_roof = imag::convex_roof(fk, rho, search_opts()).value;
  CHECK(std::abs(via_roof - expected) <= 1e-5);

  // k = 1: p1 + p2 * 2 lambda
  CHECK(imag::fk_measure_direct(rho, 1.0) ==
        doctest::Approx(0.4 + 0.6 * 0.2).epsilon(1e-12));

  CHECK_THROWS_AS(imag::fk_measure_direct(imag::sample_density(4, 3, 12), 0.5),
                  imag::WrongFormError);
  CHECK_THROWS_AS(imag::fk_measure_direct(imag::sample_density(3, 2, 12), 0.5),
                  imag::WrongFormError);
}

TEST_CASE("default measures are the five table rows") {
  const std::vector<MonotoneF> ms = imag::default_nogo_measures();
  REQUIRE(ms.size() == 5);
  CHECK(ms[0].name() == "geometric");
  CHECK(ms[1].name() == "robustness_row");
  CHECK(ms[2].name() == "entropy");
  CHECK(ms[3].name() == "fidelity_row");
  CHECK(ms[4].name() == "tsallis:0.5");
}

TEST_CASE("witness requires lambda below eta") {
  // single cell with lambda >= eta: the f_k inequality cannot fire
  imag::NogoGrid no_cell;
  no_cell.p1_values = {0.9};
  no_cell.lambda_values = {0.3};
  no_cell.eta_values = {0.1, 0.3};
  CHECK_THROWS_AS(imag::find_witness(imag::default_nogo_measures(), no_cell, search_opts()),
                  imag::NoWitnessFoundError);

  // lambda < eta with a dominant p1 yields a witness
  imag::NogoGrid cell;
  cell.p1_values = {0.7};
  cell.lambda_values = {0.1};
  cell.eta_values = {0.2};
  const imag::NogoWitness w =
      imag::find_witness(imag::default_nogo_measures(), cell, search_opts());
  CHECK(w.p1 == 0.7);
  CHECK(w.lambda == 0.1);
  CHECK(w.eta == 0.2);
  CHECK(w.k == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(w.fk_rho < w.fk_sigma - 1e-9);
  REQUIRE(w.measure_names.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(w.measure_values_rho[i] >= w.measure_values_sigma[i] - 1e-9);
  }
}

TEST_CASE("empty grid exhausts immediately") {
  imag::NogoGrid empty;
  CHECK_THROWS_AS(imag::find_witness(imag::default_nogo_measures(), empty, search_opts()),
                  imag::NoWitnessFoundError);
}

TEST_CASE("empty measure list reduces to the f_k inequality") {
  imag::NogoGrid cell;
  cell.p1_values = {0.1};
  cell.lambda_values = {0.1};
  cell.eta_values = {0.2};
  const imag::NogoWitness w = imag::find_witness({}, cell, search_opts());
  CHECK(w.measure_names.empty());
  CHECK(w.fk_rho < w.fk_sigma - 1e-9);
}
