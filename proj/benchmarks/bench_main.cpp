// SPDX-License-Identifier: Apache-2.0
//
// csipca: PCA-based CSI compression toolkit for massive-MIMO feedback
// Copyright (C) 2026 The csipca authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "csipca/chanforge.hpp"
#include "csipca/linalg.hpp"
#include "csipca/metrics.hpp"
#include "csipca/pca.hpp"
#include "csipca/quant.hpp"
#include "csipca/xforms.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace csipca;

namespace
{
    cmat random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g;
        cmat m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i)
                m(i, j) = cplx(g(rng), g(rng));
        return m;
    }

    cfr sample(const char *profile)
    {
        generator_config g;
        g.profile = profile;
        g.seed = 1;
        return generate_sample(g, resolve_profile(profile), 0);
    }
}

static void BM_JacobiSvd(benchmark::State &state)
{
    const cmat a = random_matrix(state.range(0), state.range(1), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(linalg::jacobi_svd(a));
}
BENCHMARK(BM_JacobiSvd)->Args({5, 32})->Args({25, 32})->Args({32, 13})->Unit(benchmark::kMicrosecond);

static void BM_ToAngularDelay(benchmark::State &state)
{
    cfr h;
    h.data = random_matrix(state.range(0), 32, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(to_angular_delay(h));
}
BENCHMARK(BM_ToAngularDelay)->Arg(96)->Arg(624)->Unit(benchmark::kMicrosecond);

static void BM_GenerateSample(benchmark::State &state)
{
    generator_config g;
    g.profile = "high-spread-300ns";
    const auto profile = resolve_profile(g.profile);
    std::uint64_t id = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_sample(g, profile, id++));
}
BENCHMARK(BM_GenerateSample)->Unit(benchmark::kMicrosecond);

static void BM_PipelineAD(benchmark::State &state)
{
    const auto h = sample("high-spread-300ns");
    const auto l = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
    {
        const auto taps = select_taps(to_angular_delay(h), l);
        const auto report = compress_ad(taps, 2);
        const auto rebuilt = from_tap_channel(reconstruct_taps(report));
        benchmark::DoNotOptimize(gcs(rebuilt.data, h.data));
    }
}
BENCHMARK(BM_PipelineAD)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_PipelineEV(benchmark::State &state)
{
    const auto h = sample("high-spread-300ns");
    for (auto _ : state)
    {
        const auto ev = subband_eigenvectors(subband_average(h, static_cast<std::size_t>(state.range(0))));
        const auto report = compress_ev(ev, 2);
        benchmark::DoNotOptimize(gcs(reconstruct(report), ev.data));
    }
}
BENCHMARK(BM_PipelineEV)->Arg(12)->Arg(13)->Unit(benchmark::kMicrosecond);

static void BM_QuantizeReport(benchmark::State &state)
{
    const cmat a = random_matrix(25, 32, 3);
    const auto report = compress(a, pca_fit(a), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(quantize_report(report, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_QuantizeReport)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
