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

#ifndef TXCSI_QUADRATURE_HPP
#define TXCSI_QUADRATURE_HPP

#include <functional>

namespace txcsi
{
    struct QuadratureOptions
    {
        double rel_tol = 1e-9;
        double abs_tol = 0.0;
        int max_intervals = 4000;
    };

    struct QuadratureResult
    {
        double value = 0.0;
        double error = 0.0; // estimated absolute error
        int intervals = 0;
        bool converged = false;
    };

    using Integrand = std::function<double(double)>;

    // Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. The interval with the largest
    // error estimate is bisected until the summed estimate meets max(abs_tol, rel_tol*|I|).
    QuadratureResult integrate(const Integrand &f, double a, double b, const QuadratureOptions &opts = {});

    // Integral over [a, inf) for integrands that decay at infinity. [a, a+1] is integrated
    // directly; the tail uses x = a + exp(t / (1 - t)), t in [0, 1), which turns algebraic
    // decay into exponential decay in t.
    QuadratureResult integrate_to_infinity(const Integrand &f, double a, const QuadratureOptions &opts = {});

    // Integral over [0, b] of f where f(x) ~ x^(-exponent) near 0, 0 <= exponent < 1.
    // Substitutes x = b * s^(1/(1-exponent)), which cancels the singularity exactly.
    QuadratureResult integrate_singular_at_zero(const Integrand &f, double b, double exponent,
                                                const QuadratureOptions &opts = {});
}

#endif
