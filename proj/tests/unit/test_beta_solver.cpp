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

#include "oracles.hpp"

#include "txcsi/beta_solver.hpp"
#include "txcsi/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace txcsi;

namespace
{
    const double gamma_ref = std::pow(10.0, -12.5);

    double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

    PathLossScenario constant(double gamma)
    {
        PathLossScenario s;
        s.geometry = ConstantPathLoss{gamma};
        return s;
    }

    BetaProblem point_mass(double c, double noise, double x)
    {
        BetaProblem p;
        p.c = c;
        p.noise = noise;
        p.law.atoms = {{x, 1.0}};
        return p;
    }

    BetaProblem two_class_problem(double c, double noise, int m, double q)
    {
        BetaProblem p;
        p.c = c;
        p.noise = noise;
        p.law = limiting_interference_law(PowerModel::two_class(m, 0.5, 1.0, q), constant(gamma_ref), 16);
        return p;
    }

    // Independent bisection of the equal-power fixed point in long double.
    double equal_power_oracle(double c, double noise, double pg)
    {
        const auto f = [&](long double b) { return 1.0L - noise * b - c * b * pg / (1.0L + pg * b); };
        return static_cast<double>(oracle::bisect_decreasing(f, 0.0L, 1.0L / noise));
    }

    SpatialBetaProblem spatial(double density, double b, double noise)
    {
        SpatialBetaProblem p;
        p.density = density;
        p.alpha = 4.0;
        p.gain = 1.0;
        p.model = PowerModel::equal_power(1, 1.0);
        p.b = b;
        p.noise = noise;
        return p;
    }
}

TEST(BetaEqualPower, ZeroLoadIsNoiseLimited)
{
    EXPECT_EQ(beta_equal_power(0.0, 1e-13, 1.0, gamma_ref), 1e13);
    EXPECT_EQ(beta_equal_power(0.0, 0.5, 3.0, 1.0), 2.0);
}

TEST(BetaEqualPower, GoldenRatio)
{
    EXPECT_NEAR(beta_equal_power(1.0, 1.0, 1.0, 1.0), (std::sqrt(5.0) - 1.0) / 2.0, 1e-15);
}

TEST(BetaEqualPower, ReferenceValues)
{
    // 50-digit references
    EXPECT_LT(rel(beta_equal_power(1.0, 1e-13, 1.0, gamma_ref), 4260331584262.1668), 1e-12);
    EXPECT_LT(rel(beta_equal_power(4.0, 1e-13, 1.0, gamma_ref), 927628730889.64043), 1e-12);
    EXPECT_LT(rel(beta_equal_power(4.0, 1e-13, 0.25, gamma_ref), 2784110466405.5250), 1e-12);
    EXPECT_LT(rel(beta_equal_power(16.0, 1e-13, 0.25, gamma_ref), 774009858704.27537), 1e-12);
}

TEST(BetaEqualPower, ResidualSmall)
{
    for (const int m : {1, 2, 4, 8})
        for (const double ratio : {1.0, 4.0})
        {
            const double c = ratio * m;
            const double pg = gamma_ref / m;
            const double beta = beta_equal_power(c, 1e-13, 1.0 / m, gamma_ref);
            EXPECT_LE(std::abs(-1e-13 * beta + 1.0 - c * beta * pg / (1.0 + pg * beta)), 1e-10);
        }
}

TEST(BetaEqualPower, MatchesBisectionGrid)
{
    for (const double c : {0.0, 0.25, 1.0, 4.0})
        for (const double pg : {1e-14, 1e-12, 1e-10})
            for (const double noise : {1e-13, 1e-12})
                EXPECT_LT(rel(beta_equal_power(c, noise, pg, 1.0), equal_power_oracle(c, noise, pg)), 1e-9)
                    << c << " " << pg << " " << noise;
}

TEST(BetaEqualPower, RejectsBadInput)
{
    EXPECT_THROW(beta_equal_power(-1.0, 1.0, 1.0, 1.0), txcsi::invalid_argument);
    EXPECT_THROW(beta_equal_power(1.0, 0.0, 1.0, 1.0), txcsi::invalid_argument);
}

TEST(SolveBetaGeneric, ZeroLoad)
{
    EXPECT_NEAR(solve_beta_generic(point_mass(0.0, 1e-13, 1e-12)), 1e13, 1e13 * 1e-12);
}

TEST(SolveBetaGeneric, PointMassMatchesClosedForm)
{
    for (const double c : {0.1, 0.5, 1.0, 2.0, 8.0})
        for (const double pg : {1e-14, 1e-13, 1e-12, 1e-11, 1e-10})
            for (const double noise : {1e-13, 1e-12, 1e-11})
            {
                const BetaProblem p = point_mass(c, noise, pg);
                const double beta = solve_beta_generic(p);
                EXPECT_LT(rel(beta, beta_equal_power(c, noise, pg, 1.0)), 1e-9);
                EXPECT_LE(std::abs(generic_residual(p, beta)), 1e-10);
            }
}

TEST(SolveBetaGeneric, BracketHasSingleSignChange)
{
    Rng rng(SeedSpec{77, 0});
    for (int k = 0; k < 100; ++k)
    {
        BetaProblem p;
        p.c = 8.0 * rng.uniform();
        p.noise = std::pow(10.0, -14.0 + 3.0 * rng.uniform());
        const int atoms = 1 + static_cast<int>(4.0 * rng.uniform());
        for (int a = 0; a < atoms; ++a)
            p.law.atoms.push_back({std::pow(10.0, -14.0 + 4.0 * rng.uniform()), 1.0 / atoms});
        const double hi = 1.0 / p.noise;
        int changes = 0;
        double prev = generic_residual(p, 0.0);
        for (int i = 1; i <= 1000; ++i)
        {
            const double r = generic_residual(p, hi * i / 1000.0);
            if ((prev > 0) != (r > 0))
                ++changes;
            prev = r;
        }
        EXPECT_EQ(changes, 1) << k;
        EXPECT_LE(generic_residual(p, hi), 0.0);
    }
}

TEST(SolveBetaGeneric, NonIncreasingInLoadAndPower)
{
    double prev = std::numeric_limits<double>::infinity();
    for (const double c : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0})
    {
        const double beta = solve_beta_generic(point_mass(c, 1e-13, 1e-12));
        EXPECT_LE(beta, prev * (1 + 1e-12));
        prev = beta;
    }
    prev = std::numeric_limits<double>::infinity();
    for (const double x : {1e-14, 1e-13, 1e-12, 1e-11})
    {
        BetaProblem p = point_mass(2.0, 1e-13, 1e-13);
        p.law.atoms = {{1e-13, 0.5}, {x, 0.5}};
        const double beta = solve_beta_generic(p);
        EXPECT_LE(beta, prev * (1 + 1e-12));
        prev = beta;
    }
}

TEST(SolveBetaGeneric, ParetoLawMatchesSpatialSolver)
{
    PathLossScenario s;
    SpatialDisk d;
    d.density = 1.0;
    d.interferers = 100;
    s.geometry = d;
    s.noise = 1e-3 / 256.0; // normalised noise 1e-3 at N = 16
    const PowerModel m = PowerModel::two_class(4, 0.5, 1.0, 0.5);
    BetaProblem p;
    p.c = 100.0 * 4.0 / 16.0;
    p.noise = 1e-3;
    p.law = limiting_interference_law(m, s, 16);
    const SpatialBetaProblem sp = SpatialBetaProblem::from_scenario(s, m, 16);
    EXPECT_NEAR(sp.noise, 1e-3, 1e-15);
    EXPECT_LT(rel(solve_beta_generic(p), solve_beta_spatial(sp)), 1e-8);
}

TEST(TwoClass, UnitCoefficients)
{
    const TwoClassCoefficients t = two_class_coefficients(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1);
    EXPECT_DOUBLE_EQ(t.t1, 1.0);
}

TEST(TwoClass, FiniteForReferenceParameters)
{
    for (const double c : {1.0, 4.0, 16.0})
    {
        const TwoClassCoefficients t = two_class_coefficients(c, 1e-13, gamma_ref, 0.5, 1.0, 0.5, 4);
        EXPECT_TRUE(std::isfinite(t.t1) && std::isfinite(t.t2) && std::isfinite(t.t3) && std::isfinite(t.t4));
        EXPECT_TRUE(std::isfinite(t.t5.real()) && std::isfinite(t.t5.imag()));
    }
}

TEST(TwoClass, ReferenceValue)
{
    const TwoClassCoefficients t = two_class_coefficients(16.0, 1e-13, gamma_ref, 0.5, 1.0, 0.5, 4);
    const double beta = beta_two_class(t);
    EXPECT_LT(rel(beta, 555309731074.04841), 1e-10);
    EXPECT_LE(std::abs(t.residual(beta)), 1e-8);
    EXPECT_LT(rel(beta, solve_beta_generic(two_class_problem(16.0, 1e-13, 4, 0.5))), 1e-8);
}

TEST(TwoClass, AllClassOneIsEqualPower)
{
    for (const double c : {0.5, 1.0, 4.0, 16.0})
    {
        const double beta = beta_two_class(two_class_coefficients(c, 1e-13, gamma_ref, 0.5, 1.0, 1.0, 4));
        EXPECT_LT(rel(beta, beta_equal_power(c, 1e-13, 0.5, gamma_ref)), 1e-8);
    }
}

TEST(TwoClass, AllClassTwoIsSingleStream)
{
    for (const int m : {2, 4})
        for (const double c : {1.0, 4.0, 16.0})
        {
            const double beta = beta_two_class(two_class_coefficients(c, 1e-13, gamma_ref, 0.5, 1.0, 0.0, m));
            EXPECT_LT(rel(beta, equal_power_oracle(c / m, 1e-13, gamma_ref)), 1e-8);
        }
}

TEST(TwoClass, RootsContainSolution)
{
    const TwoClassCoefficients t = two_class_coefficients(4.0, 1e-13, gamma_ref, 0.5, 1.0, 0.5, 2);
    const double beta = beta_two_class(t);
    bool found = false;
    for (const auto &z : two_class_roots(t))
        found = found || std::abs(z - std::complex<double>(beta, 0.0)) <= 1e-6 * beta;
    EXPECT_TRUE(found);
}

TEST(TwoClass, MatchesGenericGrid)
{
    for (const double q : {0.0, 0.5, 1.0})
        for (const int m : {2, 4})
            for (const double c : {1.0, 4.0})
            {
                const TwoClassCoefficients t = two_class_coefficients(c, 1e-13, gamma_ref, 0.5, 1.0, q, m);
                const double beta = beta_two_class(t);
                EXPECT_LE(std::abs(t.residual(beta)), 1e-8);
                EXPECT_LT(rel(beta, solve_beta_generic(two_class_problem(c, 1e-13, m, q))), 1e-8)
                    << q << " " << m << " " << c;
            }
}

TEST(Spatial, ResidualAtFiniteDisk)
{
    const SpatialBetaProblem p = spatial(1e-3, 0.1, 1e-13);
    const double beta = solve_beta_spatial(p);
    EXPECT_GT(beta, 0.0);
    EXPECT_LE(std::abs(spatial_residual(p, beta)), 1e-8);
}

TEST(Spatial, DecreasingInDensity)
{
    double prev = std::numeric_limits<double>::infinity();
    for (const double rho : {1e-4, 1e-3, 1e-2, 1e-1, 1.0})
    {
        const double beta = solve_beta_spatial(spatial(rho, 0.01, 1e-6));
        EXPECT_LT(beta, prev);
        prev = beta;
    }
}

TEST(Spatial, ApproachesApproximation)
{
    const SpatialBetaProblem p = spatial(1.0, 1e-4, 0.0);
    EXPECT_LT(rel(solve_beta_spatial(p), beta_spatial_approx(p)), 0.01);
}

TEST(Spatial, ApproximationValues)
{
    const SpatialBetaProblem p = spatial(1e-3, 0.1, 1e-13);
    EXPECT_LT(rel(beta_spatial_approx(p), 41063.929018737341), 1e-12);
    const double expected = std::pow(2.0 / (std::numbers::pi * std::numbers::pi * 1e-3), 2.0);
    EXPECT_LT(rel(beta_spatial_approx(p), expected), 1e-14);

    SpatialBetaProblem two = p;
    two.model = PowerModel::two_class(4, 0.5, 1.0, 0.5);
    const double denom = std::sqrt(2.0) + 0.5;
    EXPECT_LT(rel(beta_spatial_approx(two),
                  std::pow(4.0 / (2.0 * std::numbers::pi * std::numbers::pi * 1e-3 * denom), 2.0)),
              1e-14);

    SpatialBetaProblem bad = p;
    bad.alpha = 2.0;
    EXPECT_THROW(beta_spatial_approx(bad), txcsi::invalid_argument);
}

TEST(Spatial, IntegralIdentity)
{
    EXPECT_LE(integral_identity_residual(4.0, 1.0), 1e-6);
    for (const double alpha : {2.5, 3.0, 4.0})
        for (const double beta : {0.1, 1.0, 10.0})
            EXPECT_LE(integral_identity_residual(alpha, beta), 1e-6) << alpha << " " << beta;
}

TEST(Spatial, CorrectionVanishesWithDisk)
{
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 6; ++k)
    {
        const SpatialBetaProblem p = spatial(1.0, std::pow(10.0, -k), 0.0);
        const double corr = correction_term(p, 1.0);
        EXPECT_GE(corr, 0.0);
        EXPECT_LT(corr, prev);
        prev = corr;
        if (k == 6)
        {
            EXPECT_LT(corr, 1e-3 * spatial_leading_term(p, 1.0));
        }
    }
    EXPECT_LT(correction_term(spatial(1e-3, 0.05, 0.0), 1e4), correction_term(spatial(1e-3, 0.1, 0.0), 1e4));
}

TEST(Spatial, CorrectionZeroForSilentModel)
{
    SpatialBetaProblem p = spatial(1.0, 0.1, 0.0);
    p.model = PowerModel::equal_power(2, 0.0);
    EXPECT_EQ(correction_term(p, 1.0), 0.0);
}
