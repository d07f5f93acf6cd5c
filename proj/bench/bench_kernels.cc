// Copyright 2026 The gkpsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "gkpsim/kernels.h"

using namespace gkpsim;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

std::vector<double> oracle_grid() {
    return make_grid(-4.0 * kSqrtPi, 4.0 * kSqrtPi, 1e-3);
}

WavefunctionSource oracle_source() {
    return RealisticSource{realistic_params(0.02, 1.0, std::numbers::pi / 4), kAutoTruncation};
}

CombPDF1D two_mode_comb() {
    CombPDF1D pdf;
    pdf.spacings = {2.0 * kSqrtPi, kSqrtPi};
    return pdf;
}

void BM_density_grid_serial(benchmark::State &state) {
    std::vector<double> xs = oracle_grid();
    WavefunctionSource source = oracle_source();
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_grid_serial(source, xs));
    }
}
BENCHMARK(BM_density_grid_serial)->Unit(benchmark::kMillisecond);

void BM_density_grid_parallel(benchmark::State &state) {
    std::vector<double> xs = oracle_grid();
    WavefunctionSource source = oracle_source();
    for (auto _ : state) {
        benchmark::DoNotOptimize(density_grid_parallel(source, xs));
    }
}
BENCHMARK(BM_density_grid_parallel)->Unit(benchmark::kMillisecond);

void BM_sample_batch_serial(benchmark::State &state) {
    CombPDF1D pdf = two_mode_comb();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_single_batch_serial(pdf, SampleConfig{100, 1}, 100000));
    }
}
BENCHMARK(BM_sample_batch_serial)->Unit(benchmark::kMillisecond);

void BM_sample_batch_parallel(benchmark::State &state) {
    CombPDF1D pdf = two_mode_comb();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_single_batch_parallel(pdf, SampleConfig{100, 1}, 100000));
    }
}
BENCHMARK(BM_sample_batch_parallel)->Unit(benchmark::kMillisecond);

void BM_gauss_sweep_serial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sweep_serial(state.range(0)));
    }
}
BENCHMARK(BM_gauss_sweep_serial)->Arg(99)->Unit(benchmark::kMillisecond);

void BM_gauss_sweep_parallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gauss_sweep_parallel(state.range(0)));
    }
}
BENCHMARK(BM_gauss_sweep_parallel)->Arg(99)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
