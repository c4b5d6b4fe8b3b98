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

#ifndef IMAG_MONOTONE_HPP
#define IMAG_MONOTONE_HPP

#include <functional>
#include <string>
#include <vector>

#include "imag/errors.hpp"

namespace imag {

/// A function f: [0,1] -> [0,1] turning the conjugate overlap of a pure
/// state into a measure value. Admissible functions satisfy f(1) = 0, are
/// decreasing, and concave.
class MonotoneF {
 public:
  /// Built-in rows by name: "geometric" (1-x)/2, "robustness_row"
  /// sqrt(1-x^2)/2, "entropy" binary-entropy row, "fidelity_row" 1-x,
  /// "tsallis" 1-x^2 (params = {mu}, mu in (0,1)), "l2" sqrt((1-x^2)/2),
  /// "fk" min((1-x)/k, 1) (params = {k}, k in (0,1]).
  static MonotoneF builtin(const std::string& name, const std::vector<double>& params = {});

  /// Parses the CLI spelling: bare name, "tsallis:<mu>" or "fk:<k>".
  static MonotoneF from_spec(const std::string& spec);

  /// Piecewise-linear interpolation of samples (xs ascending in [0,1]).
  static MonotoneF tabulated(const std::string& name, std::vector<double> xs,
                             std::vector<double> ys);

  /// Evaluates f; the argument is clamped into [0,1] to absorb rounding.
  double operator()(double x) const;

  /// Canonical spec string ("fk:0.5", "geometric", ...).
  const std::string& name() const { return name_; }
  const std::vector<double>& params() const { return params_; }

 private:
  MonotoneF(std::string name, std::vector<double> params, std::function<double(double)> eval)
      : name_(std::move(name)), params_(std::move(params)), eval_(std::move(eval)) {}

  std::string name_;
  std::vector<double> params_;
  std::function<double(double)> eval_;
};

struct AdmissibilityReport {
  bool ok = true;
  /// Violated condition: "f(1)=0", "decreasing" or "concave"; empty if ok.
  std::string violated_condition;
  /// Human-readable location of the first violation.
  std::string detail;
};

/// Grid check of the admissibility conditions: f(1) = 0 (to 1e-9),
/// decreasing on a grid of the given step, midpoint concavity on a grid of
/// step max(grid_step, 1e-2).
AdmissibilityReport check_admissible(const MonotoneF& f, double grid_step = 1e-3);

/// The built-in rows with default parameters (tsallis mu = 0.5, fk k = 0.5).
std::vector<MonotoneF> registry_defaults();

}  // namespace imag

#endif
