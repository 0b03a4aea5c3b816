// SPDX-License-Identifier: Apache-2.0
//
// txcsi: spectral efficiency of multi-antenna links with Tx-Link CSI
// Copyright (C) 2026 The txcsi Authors
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

#include "txcsi/capacity.hpp"
#include "txcsi/montecarlo.hpp"

#include <benchmark/benchmark.h>

using namespace txcsi;

namespace
{
    LinkRealization make_link(Index n_rx, Index streams, Index interferers)
    {
        Rng rng(SeedSpec{1, 0});
        LinkRealization link;
        link.h11 = sample_cn_matrix(n_rx, n_rx, rng);
        link.gamma1 = 1e-10;
        link.powers = RealVector::Constant(streams, 1.0 / static_cast<double>(streams));
        link.k1 = sample_cn_matrix(n_rx, interferers * streams, rng);
        link.phi = RealVector::Constant(interferers * streams, std::pow(10.0, -12.5) / static_cast<double>(streams));
        link.noise = 1e-13;
        return link;
    }

    void BM_CapacityBounds(benchmark::State &state)
    {
        const Index n = state.range(0), m = state.range(1);
        const LinkRealization link = make_link(n, m, 4 * n);
        std::uint64_t k = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(capacity_bounds(link, SeedSpec{2, k++}));
    }
    BENCHMARK(BM_CapacityBounds)->Args({8, 2})->Args({16, 4})->Args({32, 4})->Unit(benchmark::kMicrosecond);

    void BM_ExactCapacity(benchmark::State &state)
    {
        const Index n = state.range(0);
        const LinkRealization link = make_link(n, 4, 4 * n);
        for (auto _ : state)
            benchmark::DoNotOptimize(exact_capacity(link));
    }
    BENCHMARK(BM_ExactCapacity)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

    void BM_SimulateTrial(benchmark::State &state)
    {
        const auto id = static_cast<ExperimentId>(state.range(0));
        const ExperimentConfig config = ExperimentConfig::defaults(id);
        const int n_rx = 16;
        const int interferers = config.resolve_interferers(n_rx, config.n_values.back());
        const SeedSpec cell = cell_seed(config.root_seed, n_rx, n_rx, 4, interferers);
        std::uint64_t t = 0;
        for (auto _ : state)
            benchmark::DoNotOptimize(simulate_trial(config, n_rx, n_rx, 4, interferers, cell.child(t++)));
        state.SetLabel(std::string(to_string(id)));
    }
    BENCHMARK(BM_SimulateTrial)
        ->Arg(static_cast<int>(ExperimentId::const_equal))
        ->Arg(static_cast<int>(ExperimentId::const_two_class))
        ->Arg(static_cast<int>(ExperimentId::spatial_equal))
        ->Unit(benchmark::kMicrosecond);
}
