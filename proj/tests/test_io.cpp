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
#include <string>

#include "doctest.h"
#include "imag/channels.hpp"
#include "imag/io.hpp"
#include "imag/states.hpp"

using imag::cplx;
using imag::DensityMatrix;
using imag::PureState;

namespace {

bool has_check(const imag::FileReport& r, const std::string& name, bool ok) {
  for (const imag::InvariantCheck& c : r.checks) {
    if (c.name == name) return c.ok == ok;
  }
  return false;
}

double residual_of(const imag::FileReport& r, const std::string& name) {
  for (const imag::InvariantCheck& c : r.checks) {
    if (c.name == name) return c.residual;
  }
  return -1.0;
}

}  // namespace

TEST_CASE("pure state serialization round trip") {
  const PureState psi = imag::sample_pure(3, 333);
  const imag::StateFile parsed = imag::parse_state_json(imag::state_to_json(psi));
  CHECK(parsed.kind == "pure");
  REQUIRE(parsed.pure.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs((*parsed.pure)[i] - psi[i]) <= 1e-12);
  }
}

TEST_CASE("density serialization round trip") {
  const DensityMatrix rho = imag::sample_density(3, 2, 334);
  const imag::StateFile parsed = imag::parse_state_json(imag::state_to_json(rho));
  CHECK(parsed.kind == "density");
  REQUIRE(parsed.density.has_value());
  CHECK(imag::approx_equal(*parsed.density, rho, 1e-12));
  CHECK(parsed.dim() == 3);
  CHECK(imag::approx_equal(parsed.as_density(), rho, 1e-12));
}

TEST_CASE("channel serialization round trip") {
  const imag::RealKrausChannel ch = imag::random_real_channel(3, 3, 2, 335);
  const imag::RealKrausChannel back = imag::parse_channel_json(imag::channel_to_json(ch));
  REQUIRE(back.size() == ch.size());
  for (std::size_t j = 0; j < ch.size(); ++j) {
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        CHECK(std::abs(back.kraus()[j](r, c) - ch.kraus()[j](r, c)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("strict parsing names the violated invariant") {
  try {
    imag::parse_state_json("{ not json");
    FAIL("expected json error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "json");
  }

  try {
    imag::parse_state_json(R"({"kind": "pure", "data": [[1.0, 0.0]]})");
    FAIL("expected dim error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "dim");
  }

  try {
    imag::parse_state_json(R"({"kind": "ket", "dim": 1, "data": [[1.0, 0.0]]})");
    FAIL("expected kind error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "kind");
  }

  try {
    imag::parse_state_json(R"({"kind": "pure", "dim": 2, "data": [[1.0, 0.0]]})");
    FAIL("expected data_shape error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "data_shape");
  }

  try {
    imag::parse_state_json(
        R"({"kind": "pure", "dim": 2, "data": [[1.0, 0.0], [0.5, 0.0]]})");
    FAIL("expected unit_norm error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "unit_norm");
  }

  try {
    imag::parse_state_json(
        R"({"kind": "density", "dim": 2,
            "data": [[[0.49, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.5, 0.0]]]})");
    FAIL("expected trace_one error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "trace_one");
  }

  try {
    imag::load_state("/nonexistent/state.json");
    FAIL("expected file error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "file");
  }
}

TEST_CASE("channel parsing rejects complex entries structurally") {
  try {
    imag::parse_channel_json(R"({"kraus": [[[1.0, 0.0], [0.0, "i"]]]})");
    FAIL("expected real_entries error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "real_entries");
  }
  try {
    imag::parse_channel_json(R"({"kraus": [[[1.0, 0.0], [0.0, 0.7]]]})");
    FAIL("expected completeness error");
  } catch (const imag::ValidationError& e) {
    CHECK(e.invariant() == "completeness");
  }
}

TEST_CASE("validate_file_text grades instead of throwing") {
  const imag::FileReport good = imag::validate_file_text(
      R"({"kind": "density", "dim": 2,
          "data": [[[0.5, 0.0], [0.1, 0.2]], [[0.1, -0.2], [0.5, 0.0]]]})");
  CHECK(good.parsed);
  CHECK(good.kind == "density");
  CHECK(good.all_ok());
  CHECK(has_check(good, "hermitian", true));
  CHECK(has_check(good, "trace_one", true));
  CHECK(has_check(good, "positive_semidefinite", true));

  const imag::FileReport bad_trace = imag::validate_file_text(
      R"({"kind": "density", "dim": 2,
          "data": [[[0.49, 0.0], [0.0, 0.2]], [[0.0, -0.2], [0.5, 0.0]]]})");
  CHECK(bad_trace.parsed);
  CHECK(!bad_trace.all_ok());
  CHECK(has_check(bad_trace, "trace_one", false));
  CHECK(residual_of(bad_trace, "trace_one") == doctest::Approx(0.01).epsilon(1e-9));

  const imag::FileReport bad_norm = imag::validate_file_text(
      R"({"kind": "pure", "dim": 2, "data": [[1.0, 0.0], [0.5, 0.0]]})");
  CHECK(bad_norm.parsed);
  CHECK(has_check(bad_norm, "unit_norm", false));

  const imag::FileReport complex_kraus = imag::validate_file_text(
      R"({"kraus": [[[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.1], [1.0, 0.0]]]]})");
  CHECK(complex_kraus.kind == "channel");
  CHECK(!complex_kraus.all_ok());
  CHECK(has_check(complex_kraus, "real_entries", false));

  const imag::FileReport garbage = imag::validate_file_text("still not json");
  CHECK(!garbage.parsed);
  CHECK(!garbage.parse_error.empty());
  CHECK(!garbage.all_ok());
}
