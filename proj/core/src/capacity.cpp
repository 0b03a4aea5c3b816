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
#include "txcsi/errors.hpp"
#include "txcsi/mp_law.hpp"

#include <cmath>
#include <numbers>

namespace txcsi
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        ComplexMatrix diagonal_congruence(const ComplexMatrix &k, const RealVector &phi)
        {
            return k * phi.asDiagonal() * k.adjoint();
        }

        // Everything the three capacity evaluations share.
        struct Prepared
        {
            SvdResult svd;
            HermitianSolver solver;

            explicit Prepared(const LinkRealization &link)
                : svd(txcsi::svd(link.h11)), solver(link.interference_covariance())
            {
            }
        };

        double exact_from(const LinkRealization &link, const Prepared &prep)
        {
            const Index m = link.streams();
            RealVector amplitude(m);
            for (Index j = 0; j < m; ++j)
                amplitude(j) = std::sqrt(link.gamma1 * link.powers(j));
            const ComplexMatrix g = link.h11 * prep.svd.right_vectors.leftCols(m) * amplitude.asDiagonal();
            const ComplexMatrix w = prep.solver.factor().matrixL().solve(g);
            const ComplexMatrix inner = ComplexMatrix::Identity(m, m) + w.adjoint() * w;
            return HermitianSolver(inner).log2_det();
        }

        double upper_from(const LinkRealization &link, const Prepared &prep)
        {
            double total = 0.0;
            for (Index j = 0; j < link.streams(); ++j)
            {
                const double q = prep.solver.quadratic_form(prep.svd.left_vectors.col(j));
                total += std::log2(1.0 + link.gamma1 * link.powers(j) * prep.svd.squared_singular_values(j) * q);
            }
            return total;
        }

        double lower_from(const LinkRealization &link, const Prepared &prep, SeedSpec seed, LowerBoundMode mode)
        {
            const Index n = link.n_rx();
            const Index m = link.streams();
            const Index kept = n - m + 1;
            const double noise_total = static_cast<double>(n) * link.noise;
            const ComplexMatrix rotated = prep.svd.left_vectors.adjoint() * link.k1;
            Rng rng(seed);

            double total = 0.0;
            for (Index i = 0; i < m; ++i)
            {
                ComplexMatrix reduced(kept, rotated.cols());
                reduced.row(0) = rotated.row(i);
                if (kept > 1)
                    reduced.bottomRows(kept - 1) = rotated.bottomRows(kept - 1);

                ComplexVector u_hat;
                if (mode == LowerBoundMode::literal)
                {
                    const ComplexMatrix rot = haar_unitary(kept, rng);
                    u_hat = rot.col(0);
                    reduced = rot * reduced;
                }
                else
                    u_hat = isotropic_unit_vector(kept, rng);

                ComplexMatrix cov = diagonal_congruence(reduced, link.phi);
                cov.diagonal().array() += noise_total;
                const double q = quadratic_form_inverse(u_hat, cov);
                total += std::log2(1.0 + link.gamma1 * link.powers(i) * prep.svd.squared_singular_values(i) * q);
            }
            return total;
        }

        double spatial_capacity(const SpatialLinkParams &p, double antenna_factor)
        {
            p.validate();
            const double e = 2.0 / p.alpha;
            const double moments = p.model.sum_stream_moment(e);
            const double ga = g_alpha(p.alpha);
            const std::vector<double> powers = p.model.representative_powers();
            const double spread = std::pow(antenna_factor / (p.link_rank * moments), p.alpha / 2.0);
            double total = 0.0;
            for (int i = 1; i <= p.model.streams; ++i)
            {
                const double lam = lambda_star(p.n_rx, p.k_tx, i);
                total += std::log2(1.0 + lam * powers[static_cast<std::size_t>(i - 1)] * ga * spread);
            }
            return total;
        }
    }

    void LinkRealization::validate() const
    {
        const Index n = n_rx();
        const Index k = k_tx();
        const Index m = streams();
        if (n < 1 || k < 1)
            throw invalid_argument("LinkRealization: channel must be non-empty");
        if (k > n)
            throw invalid_argument("LinkRealization: needs K <= N");
        if (m < 1 || m > k)
            throw invalid_argument("LinkRealization: needs 1 <= M <= K");
        if (k1.rows() != n || k1.cols() != phi.size())
            throw invalid_argument("LinkRealization: K1 must be N x (entries of Phi)");
        if ((phi.array() < 0.0).any() || !phi.allFinite())
            throw invalid_argument("LinkRealization: Phi entries must be finite and >= 0");
        if ((powers.array() < 0.0).any())
            throw invalid_argument("LinkRealization: stream powers must be >= 0");
        if (!(gamma1 >= 0.0) || !(noise >= 0.0))
            throw invalid_argument("LinkRealization: gamma1 and noise must be >= 0");
    }

    ComplexMatrix LinkRealization::interference_covariance() const
    {
        ComplexMatrix s = diagonal_congruence(k1, phi);
        s.diagonal().array() += static_cast<double>(n_rx()) * noise;
        return s;
    }

    ComplexMatrix tx_covariance(const SvdResult &svd, std::span<const double> powers)
    {
        const Index k = svd.right_vectors.cols();
        const Index m = static_cast<Index>(powers.size());
        if (m > k)
            throw invalid_argument("tx_covariance: more stream powers than transmit antennas");
        RealVector p(m);
        for (Index j = 0; j < m; ++j)
        {
            if (!(powers[static_cast<std::size_t>(j)] >= 0.0))
                throw invalid_argument("tx_covariance: powers must be >= 0");
            p(j) = powers[static_cast<std::size_t>(j)];
        }
        const auto v = svd.right_vectors.leftCols(m);
        return v * p.asDiagonal() * v.adjoint();
    }

    double exact_capacity(const LinkRealization &link)
    {
        link.validate();
        return exact_from(link, Prepared(link));
    }

    double upper_bound_capacity(const LinkRealization &link)
    {
        link.validate();
        return upper_from(link, Prepared(link));
    }

    double lower_bound_capacity(const LinkRealization &link, SeedSpec seed, LowerBoundMode mode)
    {
        link.validate();
        return lower_from(link, Prepared(link), seed, mode);
    }

    CapacityBounds capacity_bounds(const LinkRealization &link, SeedSpec seed, LowerBoundMode mode)
    {
        link.validate();
        const Prepared prep(link);
        return {lower_from(link, prep, seed, mode), exact_from(link, prep), upper_from(link, prep)};
    }

    ComplexMatrix precoded_interference_channels(Index n_rx, Index k_tx, Index streams, Index interferers, Rng &rng)
    {
        if (streams < 1 || streams > k_tx || k_tx > n_rx || interferers < 0)
            throw invalid_argument("precoded_interference_channels: needs 1 <= M <= K <= N and n >= 0");
        ComplexMatrix out(n_rx, interferers * streams);
        for (Index i = 0; i < interferers; ++i)
        {
            const SvdResult own = svd(sample_cn_matrix(n_rx, k_tx, rng));
            const ComplexMatrix cross = sample_cn_matrix(n_rx, k_tx, rng);
            out.middleCols(i * streams, streams) = cross * own.right_vectors.leftCols(streams);
        }
        return out;
    }

    AsymptoticPrediction asymptotic_capacity(double beta, std::span<const double> powers, double gamma1, int n_rx,
                                             int k_tx)
    {
        if (!(beta >= 0.0))
            throw invalid_argument("asymptotic_capacity: beta must be >= 0");
        AsymptoticPrediction out;
        out.beta = beta;
        for (std::size_t j = 0; j < powers.size(); ++j)
        {
            const double lam = lambda_star(n_rx, k_tx, static_cast<int>(j) + 1);
            const double sinr = lam * powers[j] * gamma1 * beta;
            out.lambda_star.push_back(lam);
            out.per_stream_sinr.push_back(sinr);
            out.total += std::log2(1.0 + sinr);
        }
        return out;
    }

    double g_alpha(double alpha)
    {
        if (!(alpha > 2.0))
            throw invalid_argument("g_alpha: alpha must exceed 2");
        return std::pow(alpha / (2.0 * pi) * std::sin(2.0 * pi / alpha), alpha / 2.0);
    }

    void SpatialLinkParams::validate() const
    {
        if (!(alpha > 2.0))
            throw invalid_argument("SpatialLinkParams: alpha must exceed 2");
        if (!(link_rank > 0.0))
            throw invalid_argument("SpatialLinkParams: link rank must be > 0");
        if (n_rx < 1 || k_tx < 1 || k_tx > n_rx || model.streams > k_tx)
            throw invalid_argument("SpatialLinkParams: needs M <= K <= N");
        model.validate();
    }

    double spatial_capacity_normalized(const SpatialLinkParams &p) { return spatial_capacity(p, 1.0); }

    double spatial_mean_capacity(const SpatialLinkParams &p) { return spatial_capacity(p, p.n_rx); }

    double no_csi_mean_capacity(double link_rank, int n_rx, int streams, double alpha)
    {
        if (!(link_rank > 0.0) || n_rx < 1 || streams < 1)
            throw invalid_argument("no_csi_mean_capacity: needs A > 0, N >= 1, M >= 1");
        const double ratio = static_cast<double>(n_rx) / (link_rank * streams);
        return streams * std::log2(1.0 + g_alpha(alpha) * std::pow(ratio, alpha / 2.0));
    }

    double csi_gain_ratio(double link_rank, int n_rx, int k_tx, int streams, double alpha)
    {
        SpatialLinkParams p;
        p.link_rank = link_rank;
        p.alpha = alpha;
        p.model = PowerModel::equal_power(streams, 1.0 / streams);
        p.n_rx = n_rx;
        p.k_tx = k_tx;
        return spatial_mean_capacity(p) / no_csi_mean_capacity(link_rank, n_rx, streams, alpha);
    }
}
