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

#include <benchmark/benchmark.h>

#include "imag/closed_form.hpp"
#include "imag/monotone.hpp"
#include "imag/pure.hpp"
#include "imag/roof.hpp"
#include "imag/states.hpp"

namespace {

void BM_EigHermitian(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const imag::DensityMatrix rho = imag::sample_density(d, d, 42);
  for (auto _ : state) benchmark::DoNotOptimize(imag::eig_hermitian(rho.matrix()));
}
BENCHMARK(BM_EigHermitian)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Overlap(benchmark::State& state) {
  const imag::PureState psi = imag::sample_pure(state.range(0), 7);
  for (auto _ : state) benchmark::DoNotOptimize(imag::overlap(psi));
}
BENCHMARK(BM_Overlap)->Arg(4)->Arg(64);

void BM_ConvexRoof(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const imag::DensityMatrix rho = imag::sample_density(d, d, 11);
  const imag::MonotoneF f = imag::MonotoneF::builtin("geometric");
  imag::RoofOptions opts;
  opts.n_starts = 8;
  opts.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(imag::convex_roof(f, rho, opts));
}
BENCHMARK(BM_ConvexRoof)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TildeOverlap(benchmark::State& state) {
  const std::size_t d = state.range(0);
  const imag::DensityMatrix rho = imag::sample_density(d, d, 11);
  imag::RoofOptions opts;
  opts.n_starts = 8;
  opts.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(imag::concave_roof_overlap(rho, opts));
}
BENCHMARK(BM_TildeOverlap)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Robustness(benchmark::State& state) {
  const imag::DensityMatrix rho = imag::sample_density(state.range(0), state.range(0), 23);
  for (auto _ : state) benchmark::DoNotOptimize(imag::robustness_imaginarity(rho));
}
BENCHMARK(BM_Robustness)->Arg(2)->Arg(4)->Arg(8);

void BM_RelEntropy(benchmark::State& state) {
  const imag::DensityMatrix rho = imag::sample_density(state.range(0), state.range(0), 31);
  for (auto _ : state) benchmark::DoNotOptimize(imag::rel_entropy_imaginarity(rho));
}
BENCHMARK(BM_RelEntropy)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
