// Copyright 2026 The nlsgate Authors
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

#include <random>

#include "nlsgate/evolution.hpp"
#include "nlsgate/nls_gate.hpp"
#include "nlsgate/param_search.hpp"

namespace {

using namespace nlsgate;

Matrix gaussian_matrix(int n) {
    std::mt19937_64 rng(42);
    std::normal_distribution<double> normal;
    Matrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m(r, c) = Complex(normal(rng), normal(rng));
    }
    return m;
}

void BM_Permanent(benchmark::State &state) {
    const Matrix m = gaussian_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(permanent(m));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 12, 2);

void BM_ClosedForm(benchmark::State &state) {
    const NlsParams p = optimal_params().params();
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_coefficients(p));
}
BENCHMARK(BM_ClosedForm);

void BM_SimulateNls(benchmark::State &state) {
    const NlsParams p = optimal_params().params();
    for (auto _ : state) benchmark::DoNotOptimize(simulate_nls(p));
}
BENCHMARK(BM_SimulateNls)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State &state) {
    SearchConfig cfg;
    cfg.grid_step = static_cast<double>(state.range(0)) / 100.0 * kDegree;
    for (auto _ : state) benchmark::DoNotOptimize(sweep(cfg));
}
BENCHMARK(BM_Sweep)->Arg(100)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_Optimize(benchmark::State &state) {
    const SearchConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(optimize(cfg));
}
BENCHMARK(BM_Optimize)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
