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
#include "txcsi/errors.hpp"
#include "txcsi/quadrature.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

namespace txcsi
{
    namespace
    {
        constexpr double pi = std::numbers::pi;
        constexpr int max_bisections = 200;

        // Root of a function that is positive at lo and non-positive at hi (or the reverse when
        // `increasing`), bisected until the bracket stops shrinking.
        double bisect(const std::function<double(double)> &f, double lo, double hi, bool increasing)
        {
            for (int i = 0; i < max_bisections; ++i)
            {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double v = f(mid);
                if (v == 0.0)
                    return mid;
                if ((v > 0.0) != increasing)
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        }

        // integral_L^inf x^(-e) / (1 + x beta) dx * e * L^e, the Pareto-tail contribution to the
        // fixed-point integral, computed in log coordinates x = L exp(u).
        double pareto_tail_integral(const ParetoComponent &t, double beta)
        {
            const double lb = t.scale * beta;
            const double e = t.shape;
            const Integrand g = [lb, e](double u) {
                if (u <= 0.0)
                    return std::exp(u * (1.0 - e)) / (1.0 + lb * std::exp(u));
                return std::exp(-e * u) / (lb + std::exp(-u));
            };
            const double knee = lb < 1.0 ? -std::log(lb) : 0.0;
            double value = 0.0;
            if (knee > 0.0)
                value += integrate(g, 0.0, knee).value;
            value += integrate_to_infinity(g, knee).value;
            return e * t.scale * value;
        }

        double csc(double x) { return 1.0 / std::sin(x); }
    }

    void BetaProblem::validate() const
    {
        if (!(c >= 0.0))
            throw invalid_argument("BetaProblem: c must be >= 0");
        if (!(noise > 0.0))
            throw invalid_argument("BetaProblem: noise must be > 0");
        const double mass = law.total_mass();
        if (std::abs(mass - 1.0) > 1e-9)
            throw invalid_argument("BetaProblem: interference law has total mass " + std::to_string(mass));
        for (const auto &a : law.atoms)
            if (!(a.value >= 0.0))
                throw invalid_argument("BetaProblem: negative interference atom");
        for (const auto &t : law.tails)
            if (!(t.scale > 0.0 && t.shape > 0.0 && t.shape < 1.0))
                throw invalid_argument("BetaProblem: Pareto tail needs scale > 0 and shape in (0, 1)");
    }

    void SpatialBetaProblem::validate() const
    {
        if (!(alpha > 2.0))
            throw invalid_argument("SpatialBetaProblem: alpha must exceed 2");
        if (!(density > 0.0))
            throw invalid_argument("SpatialBetaProblem: density must be > 0");
        if (!(gain > 0.0))
            throw invalid_argument("SpatialBetaProblem: gain must be > 0");
        if (!(b > 0.0))
            throw invalid_argument("SpatialBetaProblem: b must be > 0");
        if (!(noise >= 0.0))
            throw invalid_argument("SpatialBetaProblem: noise must be >= 0");
        model.validate();
    }

    SpatialBetaProblem SpatialBetaProblem::from_scenario(const PathLossScenario &scenario, const PowerModel &model,
                                                         int n_rx)
    {
        const SpatialDisk &disk = scenario.spatial();
        SpatialBetaProblem p;
        p.density = disk.density;
        p.alpha = disk.alpha;
        p.gain = disk.gain;
        p.model = model;
        p.b = disk.edge_factor(n_rx);
        p.noise = scenario.noise * interference_scale(scenario, n_rx);
        p.validate();
        return p;
    }

    // ---------- Generic fixed point ----------

    double generic_residual(const BetaProblem &p, double beta)
    {
        if (beta == 0.0)
            return 1.0;
        double integral = 0.0;
        for (const auto &a : p.law.atoms)
            integral += a.probability * a.value / (1.0 + a.value * beta);
        for (const auto &t : p.law.tails)
            integral += t.weight * pareto_tail_integral(t, beta);
        return -p.noise * beta + 1.0 - beta * p.c * integral;
    }

    double solve_beta_generic(const BetaProblem &p)
    {
        p.validate();
        const double hi = 1.0 / p.noise;
        const auto f = [&p](double beta) { return generic_residual(p, beta); };
        if (f(hi) > 0.0)
            throw numerical_error("solve_beta_generic: no sign change on [0, 1/noise]");
        return bisect(f, 0.0, hi, false);
    }

    // ---------- Equal power ----------

    double beta_equal_power(double c, double noise, double power, double gamma)
    {
        if (!(c >= 0.0))
            throw invalid_argument("beta_equal_power: c must be >= 0");
        if (!(noise > 0.0 && power > 0.0 && gamma > 0.0))
            throw invalid_argument("beta_equal_power: noise, power and gamma must be > 0");
        if (c == 0.0)
            return 1.0 / noise;
        // noise Pg beta^2 + (noise + (c - 1) Pg) beta - 1 = 0
        const double pg = power * gamma;
        const double qa = noise * pg;
        const double qb = noise + (c - 1.0) * pg;
        const double root = std::sqrt(qb * qb + 4.0 * qa);
        return qb <= 0.0 ? (root - qb) / (2.0 * qa) : 2.0 / (qb + root);
    }

    // ---------- Two-class cubic ----------

    TwoClassCoefficients two_class_coefficients(double c, double noise, double gamma, double p1, double p2, double q,
                                                int streams)
    {
        if (!(c >= 0.0 && noise > 0.0 && gamma > 0.0 && p1 > 0.0 && p2 > 0.0))
            throw invalid_argument("two_class_coefficients: needs c >= 0 and positive noise, gamma, powers");
        if (!(q >= 0.0 && q <= 1.0))
            throw invalid_argument("two_class_coefficients: q must lie in [0, 1]");
        if (streams < 1)
            throw invalid_argument("two_class_coefficients: streams must be >= 1");

        const double m = streams;
        const double g2 = gamma * gamma;
        TwoClassCoefficients t;
        t.t1 = noise * p1 * p2 * g2;
        t.t2 = (1.0 - q) * c * p1 * p2 * g2 / m + c * q * p1 * p2 * g2 + (noise - p1 * gamma) * p2 * gamma +
               noise * p1 * gamma;
        t.t3 = -p2 * gamma - p1 * gamma + noise + (1.0 - q) * c * p2 * gamma / m + q * c * p1 * gamma;
        t.t4 = 2.0 * t.t2 * t.t2 * t.t2 - 9.0 * t.t1 * t.t2 * t.t3 - 27.0 * t.t1 * t.t1;
        const double delta0 = t.t2 * t.t2 - 3.0 * t.t1 * t.t3;
        t.t5 = std::sqrt(std::complex<double>(t.t4 * t.t4 - 4.0 * delta0 * delta0 * delta0, 0.0));
        return t;
    }

    std::array<std::complex<double>, 3> two_class_roots(const TwoClassCoefficients &t)
    {
        using cd = std::complex<double>;
        const cd delta0(t.t2 * t.t2 - 3.0 * t.t1 * t.t3, 0.0);
        cd cube = 0.5 * (cd(t.t4, 0.0) + t.t5);
        if (std::abs(cube) == 0.0)
            cube = 0.5 * (cd(t.t4, 0.0) - t.t5);
        std::array<cd, 3> roots;
        if (std::abs(cube) == 0.0)
        {
            roots.fill(cd(-t.t2 / (3.0 * t.t1), 0.0));
            return roots;
        }
        const cd c0 = std::pow(cube, 1.0 / 3.0);
        const cd xi(-0.5, std::sqrt(3.0) / 2.0);
        cd ck = c0;
        for (auto &r : roots)
        {
            r = -(cd(t.t2, 0.0) + ck + delta0 / ck) / (3.0 * t.t1);
            ck *= xi;
        }
        return roots;
    }

    double beta_two_class(const TwoClassCoefficients &t)
    {
        if (!(t.t1 > 0.0))
            throw invalid_argument("beta_two_class: T1 must be > 0");
        double best = std::numeric_limits<double>::quiet_NaN();
        double best_residual = std::numeric_limits<double>::infinity();
        for (const auto &r : two_class_roots(t))
        {
            if (!(r.real() > 0.0) || std::abs(r.imag()) > 1e-8 * std::abs(r))
                continue;
            const double res = std::abs(t.residual(r.real()));
            if (res < best_residual)
            {
                best_residual = res;
                best = r.real();
            }
        }
        if (best_residual <= 1e-8)
            return best;

        // Cubic is -1 at zero and increases through its unique positive root.
        double hi = 1.0;
        for (int i = 0; t.residual(hi) < 0.0; ++i)
        {
            if (i > 2000)
                throw numerical_error("beta_two_class: no positive root");
            hi *= 2.0;
        }
        const double root = bisect([&t](double b) { return t.residual(b); }, 0.0, hi, true);
        if (std::abs(t.residual(root)) > 1e-8)
            throw numerical_error("beta_two_class: no root meets the residual tolerance");
        return root;
    }

    // ---------- Spatial fixed point ----------

    double spatial_leading_term(const SpatialBetaProblem &p, double beta)
    {
        const double e = 2.0 / p.alpha;
        return 2.0 * pi * pi * p.density * std::pow(p.gain * beta, e) / p.alpha * p.model.sum_stream_moment(e) *
               csc(2.0 * pi / p.alpha);
    }

    double correction_term(const SpatialBetaProblem &p, double beta)
    {
        if (!(beta >= 0.0))
            throw invalid_argument("correction_term: beta must be >= 0");
        if (beta == 0.0)
            return 0.0;
        const double e = 2.0 / p.alpha;
        const Integrand f = [e, beta](double tau) { return std::pow(tau, -e) / (1.0 + tau * beta); };
        double sum = 0.0;
        for (int j = 1; j <= p.model.streams; ++j)
            for (const auto &a : p.model.stream_marginal(j))
            {
                if (a.value <= 0.0)
                    continue;
                const double upper = p.b * p.gain * a.value;
                sum += a.probability * std::pow(a.value, e) * integrate_singular_at_zero(f, upper, e).value;
            }
        return 2.0 * pi * p.density * beta * std::pow(p.gain, e) / p.alpha * sum;
    }

    double spatial_residual(const SpatialBetaProblem &p, double beta)
    {
        return spatial_leading_term(p, beta) - correction_term(p, beta) + p.noise * beta - 1.0;
    }

    double solve_beta_spatial(const SpatialBetaProblem &p)
    {
        p.validate();
        const auto f = [&p](double beta) { return spatial_residual(p, beta); };
        double hi = p.noise > 0.0 ? 1.0 / p.noise : 1.0;
        for (int i = 0; f(hi) < 0.0; ++i)
        {
            if (i > 2000)
                throw numerical_error("solve_beta_spatial: could not bracket the root");
            hi *= 2.0;
        }
        return bisect(f, 0.0, hi, true);
    }

    double beta_spatial_approx(const SpatialBetaProblem &p)
    {
        if (!(p.alpha > 2.0))
            throw invalid_argument("beta_spatial_approx: alpha must exceed 2");
        const double e = 2.0 / p.alpha;
        const double moments = p.model.sum_stream_moment(e);
        if (!(moments > 0.0))
            throw invalid_argument("beta_spatial_approx: interferers transmit no power");
        const double inner = p.alpha * std::sin(2.0 * pi / p.alpha) / (2.0 * pi * pi * p.density * moments);
        return std::pow(inner, p.alpha / 2.0) / p.gain;
    }

    double integral_identity_residual(double alpha, double beta)
    {
        if (!(alpha > 2.0 && beta > 0.0))
            throw invalid_argument("integral_identity_residual: needs alpha > 2 and beta > 0");
        const double e = 2.0 / alpha;
        const Integrand f = [e, beta](double x) { return std::pow(x, -e) / (1.0 + x * beta); };
        const double quad = integrate_singular_at_zero(f, 1.0, e).value + integrate_to_infinity(f, 1.0).value;
        const double closed = std::pow(beta, e - 1.0) * pi * csc(2.0 * pi / alpha);
        return std::abs(quad - closed) / closed;
    }
}
