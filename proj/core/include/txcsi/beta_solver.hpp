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

#ifndef TXCSI_BETA_SOLVER_HPP
#define TXCSI_BETA_SOLVER_HPP

#include "txcsi/interference.hpp"

#include <array>
#include <complex>

namespace txcsi
{
    // Fixed point for the limiting Rx array-gain SINR at z = -noise:
    //   -noise * beta + 1 = beta * c * integral of x / (1 + x beta) dH(x).
    struct BetaProblem
    {
        double c = 0.0;     // nM / N
        double noise = 0.0; // sigma-bar^2, > 0
        InterferenceLaw law;

        void validate() const;
    };

    struct SpatialBetaProblem
    {
        double density = 1e-3; // rho
        double alpha = 4.0;
        double gain = 1.0; // G_t
        PowerModel model;
        double b = 0.0;     // (pi rho N / n)^(alpha/2)
        double noise = 0.0; // sigma^2 in the normalised domain, >= 0

        void validate() const;

        // noise = scenario noise * N^(alpha/2).
        static SpatialBetaProblem from_scenario(const PathLossScenario &scenario, const PowerModel &model, int n_rx);
    };

    // T1 beta^3 + T2 beta^2 + T3 beta - 1 = 0.
    struct TwoClassCoefficients
    {
        double t1 = 0.0;
        double t2 = 0.0;
        double t3 = 0.0;
        double t4 = 0.0;
        std::complex<double> t5;

        double residual(double beta) const { return ((t1 * beta + t2) * beta + t3) * beta - 1.0; }
    };

    // -noise * beta + 1 - beta * c * integral; positive below the root, negative above.
    double generic_residual(const BetaProblem &p, double beta);

    double solve_beta_generic(const BetaProblem &p);

    double beta_equal_power(double c, double noise, double power, double gamma);

    TwoClassCoefficients two_class_coefficients(double c, double noise, double gamma, double p1, double p2, double q,
                                                int streams);

    // The three cubic roots, principal cube root branch.
    std::array<std::complex<double>, 3> two_class_roots(const TwoClassCoefficients &coeffs);

    double beta_two_class(const TwoClassCoefficients &coeffs);

    // First term of the spatial fixed point: 2 pi^2 rho (G_t beta)^(2/alpha) csc(2 pi / alpha) sum_j E[P_j^(2/alpha)] / alpha.
    double spatial_leading_term(const SpatialBetaProblem &p, double beta);

    // Second term, the b-dependent finite-disk correction. Non-negative.
    double correction_term(const SpatialBetaProblem &p, double beta);

    // leading - correction + noise * beta - 1; increasing in beta.
    double spatial_residual(const SpatialBetaProblem &p, double beta);

    double solve_beta_spatial(const SpatialBetaProblem &p);

    // Interference-limited approximation with the correction and noise dropped.
    double beta_spatial_approx(const SpatialBetaProblem &p);

    // |quad - closed| / closed for integral_0^inf x^(-2/alpha) / (1 + x beta) dx against
    // beta^(2/alpha - 1) pi csc(2 pi / alpha).
    double integral_identity_residual(double alpha, double beta);
}

#endif
