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

#include "txcsi/quadrature.hpp"
#include "txcsi/errors.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace txcsi
{
    namespace
    {
        // QUADPACK qk15 abscissae and weights.
        constexpr std::array<double, 8> xgk = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        constexpr std::array<double, 8> wgk = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        constexpr std::array<double, 4> wg = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct Segment
        {
            double a, b, value, error;
            bool operator<(const Segment &o) const { return error < o.error; }
        };

        Segment kronrod15(const Integrand &f, double a, double b)
        {
            const double centre = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const double fc = f(centre);
            double kronrod = fc * wgk[7];
            double gauss = fc * wg[3];
            for (int k = 0; k < 7; ++k)
            {
                const double dx = half * xgk[k];
                const double pair = f(centre - dx) + f(centre + dx);
                kronrod += wgk[k] * pair;
                if (k % 2 == 1)
                    gauss += wg[k / 2] * pair;
            }
            kronrod *= half;
            gauss *= half;
            if (!std::isfinite(kronrod))
                throw numerical_error("integrate: non-finite integrand value on [" + std::to_string(a) + ", " +
                                      std::to_string(b) + "]");
            return {a, b, kronrod, std::abs(kronrod - gauss)};
        }
    }

    QuadratureResult integrate(const Integrand &f, double a, double b, const QuadratureOptions &opts)
    {
        QuadratureResult out;
        if (a == b)
        {
            out.converged = true;
            return out;
        }

        std::priority_queue<Segment> heap;
        Segment first = kronrod15(f, a, b);
        double total = first.value;
        double total_err = first.error;
        heap.push(first);
        int intervals = 1;

        auto done = [&] {
            return total_err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
        };

        while (!done() && intervals < opts.max_intervals)
        {
            const Segment worst = heap.top();
            heap.pop();
            const double mid = 0.5 * (worst.a + worst.b);
            if (mid <= worst.a || mid >= worst.b)
            {
                // Interval cannot be split further in floating point.
                heap.push({worst.a, worst.b, worst.value, 0.0});
                total_err -= worst.error;
                continue;
            }
            const Segment left = kronrod15(f, worst.a, mid);
            const Segment right = kronrod15(f, mid, worst.b);
            total += left.value + right.value - worst.value;
            total_err += left.error + right.error - worst.error;
            heap.push(left);
            heap.push(right);
            ++intervals;
        }

        // Re-sum to shed the drift accumulated by incremental updates.
        double sum = 0.0, err = 0.0;
        while (!heap.empty())
        {
            sum += heap.top().value;
            err += heap.top().error;
            heap.pop();
        }
        out.value = sum;
        out.error = err;
        out.intervals = intervals;
        out.converged = err <= std::max(opts.abs_tol, opts.rel_tol * std::abs(sum));
        return out;
    }

    QuadratureResult integrate_to_infinity(const Integrand &f, double a, const QuadratureOptions &opts)
    {
        const QuadratureResult head = integrate(f, a, a + 1.0, opts);
        const Integrand mapped = [&f, a](double t) {
            const double u = t / (1.0 - t);
            if (u > 700.0)
                return 0.0;
            const double s = std::exp(u);
            const double jac = s / ((1.0 - t) * (1.0 - t));
            const double fx = f(a + s);
            return fx == 0.0 ? 0.0 : fx * jac;
        };
        const QuadratureResult tail = integrate(mapped, 0.0, 1.0, opts);
        QuadratureResult out;
        out.value = head.value + tail.value;
        out.error = head.error + tail.error;
        out.intervals = head.intervals + tail.intervals;
        out.converged = head.converged && tail.converged;
        return out;
    }

    QuadratureResult integrate_singular_at_zero(const Integrand &f, double b, double exponent,
                                                const QuadratureOptions &opts)
    {
        if (!(exponent >= 0.0 && exponent < 1.0))
            throw invalid_argument("integrate_singular_at_zero: exponent must lie in [0, 1)");
        if (b <= 0.0)
            return {0.0, 0.0, 0, true};
        const double k = 1.0 / (1.0 - exponent);
        const Integrand mapped = [&f, b, k](double s) {
            if (s <= 0.0)
                return 0.0;
            const double x = b * std::pow(s, k);
            if (x <= 0.0)
                return 0.0;
            return f(x) * b * k * std::pow(s, k - 1.0);
        };
        return integrate(mapped, 0.0, 1.0, opts);
    }
}
