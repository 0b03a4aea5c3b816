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

#include "txcsi/mp_law.hpp"
#include "txcsi/errors.hpp"
#include "txcsi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace txcsi
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        // Closed-form CDF on [a1, a2]. The inverse-trig terms are written with atan2 so the
        // expression stays continuous at both support edges, where sqrt(R) -> 0.
        double cdf_closed(const MpParams &p, double x)
        {
            const double mid = 0.5 * (p.a1 + p.a2);
            const double half = 0.5 * (p.a2 - p.a1);
            const double geo = std::sqrt(p.a1 * p.a2); // |1 - d|
            const double r = std::max(0.0, (p.a2 - x) * (x - p.a1));
            const double root = std::sqrt(r);
            const double s = std::clamp((x - mid) / half, -1.0, 1.0);

            double value = p.zero_mass() + mid / 4.0 - geo / 4.0 + root / (2.0 * pi) + mid / (2.0 * pi) * std::asin(s);
            if (geo > 0.0)
                value -= geo / (2.0 * pi) * std::atan2(mid * x - p.a1 * p.a2, geo * root);
            return value;
        }

        // Same quantity by quadrature. y = mid - half*cos(theta) maps the support onto
        // [0, pi] and removes both square-root edge singularities.
        double cdf_quadrature(const MpParams &p, double x)
        {
            const double mid = 0.5 * (p.a1 + p.a2);
            const double half = 0.5 * (p.a2 - p.a1);
            const double theta_x = std::acos(std::clamp((mid - x) / half, -1.0, 1.0));
            const Integrand f = [mid, half](double theta) {
                const double s = std::sin(theta);
                const double y = mid - half * std::cos(theta);
                if (y <= 0.0)
                    return 2.0 / pi; // d = 1 limit at theta -> 0
                return half * half * s * s / (2.0 * pi * y);
            };
            QuadratureOptions opts;
            opts.rel_tol = 1e-12;
            opts.abs_tol = 1e-13;
            return p.zero_mass() + integrate(f, 0.0, theta_x, opts).value;
        }

        double cdf_unchecked(const MpParams &p, double x)
        {
            if (x < p.a1 || (x == p.a1 && p.a1 > 0.0))
                return p.zero_mass();
            if (x >= p.a2)
                return 1.0;
            return cdf_closed(p, x);
        }
    }

    MpParams::MpParams(double ratio) : d(ratio)
    {
        if (!(ratio > 0.0 && ratio <= 1.0))
            throw invalid_argument("MpParams: aspect ratio d = K/N must lie in (0, 1], got " + std::to_string(ratio));
        const double s = std::sqrt(ratio);
        a1 = (1.0 - s) * (1.0 - s);
        a2 = (1.0 + s) * (1.0 + s);
    }

    double mp_cdf(const MpParams &p, double x)
    {
        if (!(x >= 0.0))
            throw invalid_argument("mp_cdf: x must be >= 0");
        if (x <= p.a1)
            return p.d < 1.0 ? p.zero_mass() : 0.0;
        if (x >= p.a2)
            return 1.0;

        const double closed = cdf_closed(p, x);
        const double quad = cdf_quadrature(p, x);
        if (std::abs(closed - quad) > 1e-6)
            throw numerical_error("mp_cdf: closed form and quadrature disagree at x = " + std::to_string(x));
        return closed;
    }

    double mp_pdf(const MpParams &p, double x)
    {
        if (!std::isfinite(x))
            throw invalid_argument("mp_pdf: non-finite x");
        if (x <= p.a1 || x >= p.a2)
            return 0.0;
        return std::sqrt((p.a2 - x) * (x - p.a1)) / (2.0 * pi * x);
    }

    double mp_inverse_cdf(const MpParams &p, double q)
    {
        const double floor = p.zero_mass();
        if (!(q >= floor && q <= 1.0))
            throw invalid_argument("mp_inverse_cdf: q must lie in [" + std::to_string(floor) + ", 1], got " +
                                   std::to_string(q));
        if (q == 1.0)
            return p.a2;
        if (q == floor)
            return p.a1;

        double lo = p.a1, hi = p.a2;
        for (int it = 0; it < 200 && hi - lo > 0.0; ++it)
        {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (cdf_unchecked(p, mid) < q)
                lo = mid;
            else
                hi = mid;
        }
        const double x = 0.5 * (lo + hi);
        if (std::abs(mp_cdf(p, x) - q) > 1e-9)
            throw numerical_error("mp_inverse_cdf: bisection did not reach 1e-9 at q = " + std::to_string(q));
        return x;
    }

    double lambda_star(int n_rx, int k_tx, int j)
    {
        if (k_tx < 1 || n_rx < k_tx)
            throw invalid_argument("lambda_star: need 1 <= K <= N");
        if (j < 1 || j > k_tx)
            throw invalid_argument("lambda_star: stream index j = " + std::to_string(j) + " outside [1, " +
                                   std::to_string(k_tx) + "]");
        const MpParams p(static_cast<double>(k_tx) / static_cast<double>(n_rx));
        const double q = static_cast<double>(n_rx - j + 1) / static_cast<double>(n_rx);
        return mp_inverse_cdf(p, q);
    }

    double lambda_star_limit(std::optional<double> d)
    {
        if (!d)
            return 1.0;
        const MpParams p(*d);
        return p.a2;
    }
}
