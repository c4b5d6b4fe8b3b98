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

#include "imag/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace imag {

namespace {

double binary_entropy_row(double x) {
  // h(x) = H2((1+x)/2) in bits; the 0*log(0) limits are 0.
  const double p = 0.5 * (1.0 + x);
  const double q = 0.5 * (1.0 - x);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

MonotoneF MonotoneF::builtin(const std::string& name, const std::vector<double>& params) {
  auto want_no_params = [&]() {
    if (!params.empty()) {
      throw ParamOutOfRangeError("monotone '" + name + "' takes no parameters");
    }
  };
  if (name == "geometric") {
    want_no_params();
    return MonotoneF(name, {}, [](double x) { return 0.5 * (1.0 - x); });
  }
  if (name == "robustness_row") {
    want_no_params();
    return MonotoneF(name, {}, [](double x) { return 0.5 * std::sqrt(std::max(0.0, 1.0 - x * x)); });
  }
  if (name == "entropy") {
    want_no_params();
    return MonotoneF(name, {}, binary_entropy_row);
  }
  if (name == "fidelity_row") {
    want_no_params();
    return MonotoneF(name, {}, [](double x) { return 1.0 - x; });
  }
  if (name == "tsallis") {
    if (params.size() != 1) throw ParamOutOfRangeError("tsallis requires one parameter mu");
    const double mu = params[0];
    if (!(mu > 0.0 && mu < 1.0)) throw ParamOutOfRangeError("tsallis: mu must lie in (0, 1)");
    // All Tsallis rows share the same pure-state profile 1 - x^2.
    return MonotoneF("tsallis:" + format_param(mu), {mu},
                     [](double x) { return 1.0 - x * x; });
  }
  if (name == "l2") {
    want_no_params();
    return MonotoneF(name, {},
                     [](double x) { return std::sqrt(std::max(0.0, 0.5 * (1.0 - x * x))); });
  }
  if (name == "fk") {
    if (params.size() != 1) throw ParamOutOfRangeError("fk requires one parameter k");
    const double k = params[0];
    if (!(k > 0.0 && k <= 1.0)) throw ParamOutOfRangeError("fk: k must lie in (0, 1]");
    return MonotoneF("fk:" + format_param(k), {k},
                     [k](double x) { return std::min((1.0 - x) / k, 1.0); });
  }
  throw UnknownNameError("unknown monotone function '" + name + "'");
}

MonotoneF MonotoneF::from_spec(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) return builtin(spec);
  const std::string name = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  double value = 0.0;
  std::size_t consumed = 0;
  try {
    value = std::stod(arg, &consumed);
  } catch (const std::exception&) {
    throw ParamOutOfRangeError("cannot parse parameter in '" + spec + "'");
  }
  if (consumed != arg.size()) {
    throw ParamOutOfRangeError("cannot parse parameter in '" + spec + "'");
  }
  return builtin(name, {value});
}

MonotoneF MonotoneF::tabulated(const std::string& name, std::vector<double> xs,
                               std::vector<double> ys) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw ParamOutOfRangeError("tabulated: need at least two matching samples");
  }
  if (!std::is_sorted(xs.begin(), xs.end())) {
    throw ParamOutOfRangeError("tabulated: sample abscissae must be ascending");
  }
  auto eval = [xs = std::move(xs), ys = std::move(ys)](double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
  };
  return MonotoneF(name, {}, std::move(eval));
}

double MonotoneF::operator()(double x) const {
  return eval_(std::clamp(x, 0.0, 1.0));
}

AdmissibilityReport check_admissible(const MonotoneF& f, double grid_step) {
  AdmissibilityReport report;
  constexpr double kTol = 1e-9;

  if (std::abs(f(1.0)) > kTol) {
    report.ok = false;
    report.violated_condition = "f(1)=0";
    report.detail = "f(1) = " + std::to_string(f(1.0));
    return report;
  }

  const int n = std::max(2, static_cast<int>(std::round(1.0 / grid_step)));
  for (int i = 0; i < n; ++i) {
    const double x0 = static_cast<double>(i) / n;
    const double x1 = static_cast<double>(i + 1) / n;
    if (f(x1) > f(x0) + kTol) {
      report.ok = false;
      report.violated_condition = "decreasing";
      report.detail = "f(" + std::to_string(x1) + ") > f(" + std::to_string(x0) + ")";
      return report;
    }
  }

  const double coarse = std::max(grid_step, 1e-2);
  const int m = std::max(2, static_cast<int>(std::round(1.0 / coarse)));
  for (int i = 0; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      const double x = static_cast<double>(i) / m;
      const double y = static_cast<double>(j) / m;
      if (f(0.5 * (x + y)) < 0.5 * (f(x) + f(y)) - kTol) {
        report.ok = false;
        report.violated_condition = "concave";
        report.detail = "midpoint of (" + std::to_string(x) + ", " + std::to_string(y) + ")";
        return report;
      }
    }
  }
  return report;
}

std::vector<MonotoneF> registry_defaults() {
  return {
      MonotoneF::builtin("geometric"),     MonotoneF::builtin("robustness_row"),
      MonotoneF::builtin("entropy"),       MonotoneF::builtin("fidelity_row"),
      MonotoneF::builtin("tsallis", {0.5}), MonotoneF::builtin("l2"),
      MonotoneF::builtin("fk", {0.5}),
  };
}

}  // namespace imag
