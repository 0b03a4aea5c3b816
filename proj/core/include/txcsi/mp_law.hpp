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

#ifndef TXCSI_MP_LAW_HPP
#define TXCSI_MP_LAW_HPP

#include <optional>

namespace txcsi
{
    // Marchenko-Pastur law F_d: limiting e.d.f. of the eigenvalues of (1/N) G G^H for an
    // N x K matrix G of IID CN(0,1) entries with K/N -> d. Only 0 < d <= 1 (K <= N).
    struct MpParams
    {
        double d;  // aspect ratio K/N
        double a1; // lower support edge (1 - sqrt d)^2
        double a2; // upper support edge (1 + sqrt d)^2

        explicit MpParams(double ratio);

        // Mass of the atom at zero, max(0, 1 - d).
        double zero_mass() const noexcept { return d < 1.0 ? 1.0 - d : 0.0; }
    };

    // F_d(x), including the zero atom. Closed form on (a1, a2); every evaluation inside the
    // support is cross-checked against quadrature of the density and throws numerical_error
    // if the two disagree by more than 1e-6.
    double mp_cdf(const MpParams &p, double x);

    // Continuous part of the density, sqrt((a2 - x)(x - a1)) / (2 pi x) on (a1, a2).
    double mp_pdf(const MpParams &p, double x);

    // Bisection on [a1, a2]; the result satisfies |F_d(x) - q| <= 1e-9.
    // Requires max(0, 1 - d) <= q <= 1.
    double mp_inverse_cdf(const MpParams &p, double q);

    // Quantile approximation of the j-th largest (normalised) squared singular value of an
    // n_rx x k_tx Gaussian channel: F_d^{-1}((N - j + 1) / N) with d = K/N.
    double lambda_star(int n_rx, int k_tx, int j);

    // Limit of the top normalised squared singular values: (1 + sqrt d)^2 when K grows with N,
    // 1 when K stays finite (pass std::nullopt).
    double lambda_star_limit(std::optional<double> d);
}

#endif
