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

#ifndef IMAG_SRC_NELDER_MEAD_HPP
#define IMAG_SRC_NELDER_MEAD_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace imag::detail {

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  long evals = 0;
  bool converged = false;
};

/// Derivative-free simplex minimizer with the dimension-adaptive expansion
/// and contraction coefficients. Deterministic; stops when the simplex value
/// spread drops below `tol` or `max_evals` objective evaluations were spent.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                                    const std::vector<double>& x0, double step, double tol,
                                    long max_evals) {
  const std::size_t n = x0.size();
  NelderMeadResult out;
  if (n == 0 || max_evals <= 0) {
    out.x = x0;
    out.value = fn(x0);
    out.evals = 1;
    return out;
  }

  const double nd = static_cast<double>(n);
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / nd;
  const double gamma = 0.75 - 0.5 / nd;
  const double delta = 1.0 - 1.0 / nd;

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> vals(n + 1);
  long evals = 0;
  for (std::size_t i = 1; i <= n; ++i) pts[i][i - 1] += step;
  for (std::size_t i = 0; i <= n; ++i) {
    vals[i] = fn(pts[i]);
    ++evals;
  }

  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto sort_order = [&]() {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  };
  sort_order();

  // Running sum of the n best points, for O(n) centroids.
  std::vector<double> sum_best(n, 0.0);
  auto rebuild_sum = [&]() {
    std::fill(sum_best.begin(), sum_best.end(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& p = pts[order[k]];
      for (std::size_t d = 0; d < n; ++d) sum_best[d] += p[d];
    }
  };
  rebuild_sum();

  std::vector<double> centroid(n), xr(n), xe(n), xc(n);
  bool converged = false;
  while (evals < max_evals) {
    const std::size_t ibest = order[0];
    const std::size_t iworst = order[n];
    if (vals[iworst] - vals[ibest] < tol) {
      converged = true;
      break;
    }

    for (std::size_t d = 0; d < n; ++d) centroid[d] = sum_best[d] / nd;
    const auto& worst = pts[iworst];
    for (std::size_t d = 0; d < n; ++d) xr[d] = centroid[d] + alpha * (centroid[d] - worst[d]);
    const double fr = fn(xr);
    ++evals;

    bool shrink = false;
    if (fr < vals[order[0]]) {
      for (std::size_t d = 0; d < n; ++d) xe[d] = centroid[d] + beta * (xr[d] - centroid[d]);
      const double fe = fn(xe);
      ++evals;
      if (fe < fr) {
        pts[iworst] = xe;
        vals[iworst] = fe;
      } else {
        pts[iworst] = xr;
        vals[iworst] = fr;
      }
    } else if (fr < vals[order[n - 1]]) {
      pts[iworst] = xr;
      vals[iworst] = fr;
    } else if (fr < vals[iworst]) {
      for (std::size_t d = 0; d < n; ++d) xc[d] = centroid[d] + gamma * (xr[d] - centroid[d]);
      const double fc = fn(xc);
      ++evals;
      if (fc <= fr) {
        pts[iworst] = xc;
        vals[iworst] = fc;
      } else {
        shrink = true;
      }
    } else {
      for (std::size_t d = 0; d < n; ++d) xc[d] = centroid[d] - gamma * (centroid[d] - worst[d]);
      const double fc = fn(xc);
      ++evals;
      if (fc < vals[iworst]) {
        pts[iworst] = xc;
        vals[iworst] = fc;
      } else {
        shrink = true;
      }
    }

    if (shrink) {
      const auto& best = pts[order[0]];
      for (std::size_t k = 1; k <= n; ++k) {
        auto& p = pts[order[k]];
        for (std::size_t d = 0; d < n; ++d) p[d] = best[d] + delta * (p[d] - best[d]);
        vals[order[k]] = fn(p);
        ++evals;
        if (evals >= max_evals) break;
      }
      sort_order();
      rebuild_sum();
    } else {
      // The worst point was replaced; fix the ordering and the running sum.
      std::size_t moved = iworst;
      sort_order();
      if (order[n] != moved) {
        // The new point joined the best-n set, displacing another point.
        for (std::size_t d = 0; d < n; ++d) {
          sum_best[d] += pts[moved][d] - pts[order[n]][d];
        }
      }
    }
  }

  sort_order();
  out.x = pts[order[0]];
  out.value = vals[order[0]];
  out.evals = evals;
  out.converged = converged || (vals[order[n]] - vals[order[0]] < tol);
  return out;
}

}  // namespace imag::detail

#endif
