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
#include "txcsi/errors.hpp"
#include "txcsi/mp_law.hpp"
#include "txcsi/quadrature.hpp"
#include "txcsi/randmat.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace txcsi;

TEST(MpParams, EdgesAndDomain)
{
    const MpParams p(0.25);
    EXPECT_DOUBLE_EQ(p.a1, 0.25);
    EXPECT_DOUBLE_EQ(p.a2, 2.25);
    EXPECT_DOUBLE_EQ(p.zero_mass(), 0.75);
    EXPECT_EQ(MpParams(1.0).a1, 0.0);
    EXPECT_THROW(MpParams(0.0), txcsi::invalid_argument);
    EXPECT_THROW(MpParams(1.5), txcsi::invalid_argument);
}

TEST(MpCdf, UnitRatioValues)
{
    const MpParams p(1.0);
    EXPECT_EQ(mp_cdf(p, 0.0), 0.0);
    EXPECT_EQ(mp_cdf(p, 4.0), 1.0);
    EXPECT_NEAR(mp_cdf(p, 2.0), (std::numbers::pi + 2.0) / (2.0 * std::numbers::pi), 1e-12);
    EXPECT_NEAR(mp_cdf(p, 2.0), 0.81830988618379067, 1e-12);
}

TEST(MpCdf, ZeroAtomBelowSupport)
{
    EXPECT_DOUBLE_EQ(mp_cdf(MpParams(0.25), 0.2), 0.75);
    EXPECT_DOUBLE_EQ(mp_cdf(MpParams(0.25), 0.0), 0.75);
    EXPECT_THROW(mp_cdf(MpParams(0.5), -1.0), txcsi::invalid_argument);
}

TEST(MpCdf, MatchesHighPrecisionReference)
{
    // References from 40-digit quadrature of the density.
    EXPECT_NEAR(mp_cdf(MpParams(0.5), 1.0), 0.78800210755193428, 1e-10);
    EXPECT_NEAR(mp_cdf(MpParams(0.25), 1.5), 0.95219321799122854, 1e-10);
}

TEST(MpCdf, MatchesSimpsonOracleOnGrid)
{
    for (const double d : {0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
    {
        const MpParams p(d);
        for (int i = 0; i <= 40; ++i)
        {
            const double x = p.a1 + (p.a2 - p.a1) * i / 40.0;
            EXPECT_NEAR(mp_cdf(p, x), oracle::mp_cdf_numeric(d, x), 1e-8) << "d=" << d << " x=" << x;
        }
    }
}

TEST(MpCdf, MonotoneWithCorrectRange)
{
    for (const double d : {0.2, 0.6, 1.0})
    {
        const MpParams p(d);
        double prev = mp_cdf(p, 0.0);
        EXPECT_DOUBLE_EQ(prev, p.zero_mass());
        for (int i = 1; i <= 1000; ++i)
        {
            const double v = mp_cdf(p, 5.0 * i / 1000.0);
            EXPECT_GE(v, prev - 1e-15);
            EXPECT_LE(v, 1.0);
            prev = v;
        }
        EXPECT_EQ(prev, 1.0);
    }
}

TEST(MpPdf, Values)
{
    const MpParams p(1.0);
    EXPECT_EQ(mp_pdf(p, 5.0), 0.0);
    EXPECT_NEAR(mp_pdf(p, 2.0), 1.0 / (2.0 * std::numbers::pi), 1e-15);
    EXPECT_THROW(mp_pdf(p, std::numeric_limits<double>::infinity()), txcsi::invalid_argument);
}

TEST(MpPdf, NormalisesWithZeroAtom)
{
    for (const double d : {0.3, 1.0})
    {
        const MpParams p(d);
        const double mass =
            integrate([&](double x) { return mp_pdf(p, x); }, p.a1, p.a2, {1e-12, 1e-13, 20000}).value;
        EXPECT_NEAR(mass + p.zero_mass(), 1.0, 1e-8);
    }
}

TEST(MpInverseCdf, EdgesAndSelfConsistency)
{
    const MpParams unit(1.0);
    EXPECT_EQ(mp_inverse_cdf(unit, 1.0), 4.0);
    EXPECT_EQ(mp_inverse_cdf(unit, 0.0), 0.0);
    EXPECT_NEAR(mp_inverse_cdf(unit, 0.5), 0.65277594163357037, 1e-9);
    for (const double d : {0.2, 0.5, 1.0})
    {
        const MpParams p(d);
        for (int i = 0; i <= 50; ++i)
        {
            const double q = p.zero_mass() + (1.0 - p.zero_mass()) * i / 50.0;
            EXPECT_NEAR(mp_cdf(p, mp_inverse_cdf(p, q)), q, 1e-9);
        }
    }
    EXPECT_THROW(mp_inverse_cdf(MpParams(0.5), 0.3), txcsi::invalid_argument);
    EXPECT_THROW(mp_inverse_cdf(unit, 1.1), txcsi::invalid_argument);
}

TEST(MpInverseCdf, MedianAgreesWithLargeWishart)
{
    const RealVector v = wishart_squared_singular_values(512, 512, SeedSpec{99, 0});
    std::vector<double> s(v.data(), v.data() + v.size());
    std::sort(s.begin(), s.end());
    const double empirical = 0.5 * (s[255] + s[256]);
    EXPECT_NEAR(empirical, mp_inverse_cdf(MpParams(1.0), 0.5), 0.03);
}

TEST(LambdaStar, Examples)
{
    EXPECT_EQ(lambda_star(16, 16, 1), 4.0);
    EXPECT_NEAR(mp_cdf(MpParams(1.0), lambda_star(16, 16, 2)), 15.0 / 16.0, 1e-9);
    EXPECT_NEAR(lambda_star(12, 12, 4), 1.6113996864579360, 1e-8);
    EXPECT_THROW(lambda_star(16, 16, 0), txcsi::invalid_argument);
    EXPECT_THROW(lambda_star(16, 16, 17), txcsi::invalid_argument);
    EXPECT_THROW(lambda_star(8, 16, 1), txcsi::invalid_argument);
}

TEST(LambdaStar, ApproachesUpperEdgeWithinQuantileStep)
{
    const MpParams p(0.5);
    double prev = 0.0;
    for (const int n : {8, 16, 32, 64, 128})
    {
        const double top = lambda_star(n, n / 2, 2);
        EXPECT_LE(p.a2 - top, p.a2 - mp_inverse_cdf(p, 1.0 - 1.0 / n) + 1e-12);
        EXPECT_GE(top, prev);
        prev = top;
    }
}

TEST(LambdaStarLimit, Values)
{
    EXPECT_EQ(lambda_star_limit(1.0), 4.0);
    EXPECT_EQ(lambda_star_limit(0.25), 2.25);
    EXPECT_EQ(lambda_star_limit(std::nullopt), 1.0);
}

TEST(MpLaw, PooledWishartSpectrum)
{
    std::vector<double> pooled;
    for (std::uint64_t r = 0; r < 4; ++r)
    {
        const RealVector v = wishart_squared_singular_values(128, 64, SeedSpec{55, r});
        pooled.insert(pooled.end(), v.data(), v.data() + v.size());
    }
    // Non-zero eigenvalues of (1/N) G G^H with K = N/2 follow F_d conditioned on x > 0.
    const MpParams p(0.5);
    const auto conditional = [&](double x) { return (mp_cdf(p, x) - p.zero_mass()) / (1.0 - p.zero_mass()); };
    EXPECT_LT(oracle::ks_distance(pooled, conditional), 0.05);
}
