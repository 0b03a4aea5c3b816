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

#include "txcsi/beta_solver.hpp"
#include "txcsi/mp_law.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace txcsi;

namespace
{
    const double gamma_ref = std::pow(10.0, -12.5);

    void BM_BetaEqualPower(benchmark::State &state)
    {
        double c = 1.0;
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(beta_equal_power(c, 1e-13, 0.25, gamma_ref));
            c = c < 8.0 ? c + 0.5 : 1.0;
        }
    }
    BENCHMARK(BM_BetaEqualPower);

    void BM_BetaTwoClass(benchmark::State &state)
    {
        const TwoClassCoefficients t = two_class_coefficients(16.0, 1e-13, gamma_ref, 0.5, 1.0, 0.5, 4);
        for (auto _ : state)
            benchmark::DoNotOptimize(beta_two_class(t));
    }
    BENCHMARK(BM_BetaTwoClass);

    void BM_SolveBetaGenericAtomic(benchmark::State &state)
    {
        PathLossScenario s;
        s.geometry = ConstantPathLoss{gamma_ref};
        BetaProblem p;
        p.c = 16.0;
        p.noise = 1e-13;
        p.law = limiting_interference_law(PowerModel::two_class(4, 0.5, 1.0, 0.5), s, 16);
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_beta_generic(p));
    }
    BENCHMARK(BM_SolveBetaGenericAtomic);

    void BM_SolveBetaSpatial(benchmark::State &state)
    {
        PathLossScenario s;
        SpatialDisk d;
        d.interferers = 500;
        s.geometry = d;
        const SpatialBetaProblem p =
            SpatialBetaProblem::from_scenario(s, PowerModel::two_class(4, 0.5, 1.0, 0.5), static_cast<int>(state.range(0)));
        for (auto _ : state)
            benchmark::DoNotOptimize(solve_beta_spatial(p));
    }
    BENCHMARK(BM_SolveBetaSpatial)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

    void BM_MpInverseCdf(benchmark::State &state)
    {
        const MpParams p(0.5);
        double q = 0.51;
        for (auto _ : state)
        {
            benchmark::DoNotOptimize(mp_inverse_cdf(p, q));
            q = q < 0.99 ? q + 0.01 : 0.51;
        }
    }
    BENCHMARK(BM_MpInverseCdf);

    void BM_LambdaStar(benchmark::State &state)
    {
        const int n = static_cast<int>(state.range(0));
        for (auto _ : state)
            for (int j = 1; j <= 8; ++j)
                benchmark::DoNotOptimize(lambda_star(n, n, j));
    }
    BENCHMARK(BM_LambdaStar)->Arg(16)->Arg(40);
}
