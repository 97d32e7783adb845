// Copyright 2026 The qgeom Authors
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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "qgeom/qgeom.hpp"

namespace {

using namespace qgeom;

void BM_AnalyticSpectrum(benchmark::State& state) {
  const HamiltonianParams p{0.5, 0.8, 0.2, 0.3, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(analytic_spectrum(p));
}
BENCHMARK(BM_AnalyticSpectrum);

void BM_JacobiSpectrum(benchmark::State& state) {
  const auto h = build_hamiltonian({0.5, 0.8, 0.2, 0.3, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(numeric_spectrum(h));
}
BENCHMARK(BM_JacobiSpectrum);

void BM_NumericMetric(benchmark::State& state) {
  const auto f = family_for(default_coefficients(static_cast<Case>(state.range(0))));
  const auto xi = f.coordinates_of(f.base());
  for (auto _ : state) benchmark::DoNotOptimize(numeric_fs_metric(f, xi));
}
BENCHMARK(BM_NumericMetric)->DenseRange(static_cast<int>(Case::C1), static_cast<int>(Case::C7));

void BM_ClosedFormMetric(benchmark::State& state) {
  const auto eta = default_coefficients(Case::C7);
  for (auto _ : state) benchmark::DoNotOptimize(analytic_metric_c7(eta, kDefaultBasePoint));
}
BENCHMARK(BM_ClosedFormMetric);

void BM_CurvatureFromStates(benchmark::State& state) {
  const auto f = family_for(default_coefficients(Case::C7));
  const auto field = metric_field(f, 1.0, 1e-3);
  const auto xi = f.coordinates_of(f.base());
  CurvatureOptions opts;
  opts.richardson = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(curvature_at(field, xi, opts));
}
BENCHMARK(BM_CurvatureFromStates)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CurvatureClosedFormField(benchmark::State& state) {
  const auto field = g0_field(0.0);
  const std::vector<double> xi{0.3, 0.1, 0.2, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(curvature_at(field, xi));
}
BENCHMARK(BM_CurvatureClosedFormField)->Unit(benchmark::kMicrosecond);

void BM_ConcurrenceScan(benchmark::State& state) {
  const auto f = family_for(default_coefficients(Case::C7));
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{{Coord::omega, 0.0, 3.0, n}, {Coord::phi, -1.5, 1.5, n}};
  for (auto _ : state) benchmark::DoNotOptimize(scan_concurrence(f, grid));
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_ConcurrenceScan)->Arg(16)->Arg(64)->Arg(256);

void BM_PerturbationAudit(benchmark::State& state) {
  const auto eta = default_coefficients(Case::C7);
  for (auto _ : state) benchmark::DoNotOptimize(audit_correction(eta, kDefaultBasePoint));
}
BENCHMARK(BM_PerturbationAudit)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
