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

#ifndef TXCSI_CAPACITY_HPP
#define TXCSI_CAPACITY_HPP

#include "txcsi/interference.hpp"
#include "txcsi/randmat.hpp"

#include <span>
#include <vector>

namespace txcsi
{
    // One realisation of the representative link and its interference.
    struct LinkRealization
    {
        ComplexMatrix h11;   // N x K representative channel
        double gamma1 = 1.0; // representative path loss
        RealVector powers;   // P_1j, j = 1..M
        ComplexMatrix k1;    // N x nM interferer channels, column i*M + j for stream j of interferer i
        RealVector phi;      // nM received interference powers
        double noise = 0.0;  // sigma-bar^2; each antenna sees N * noise

        Index n_rx() const noexcept { return h11.rows(); }
        Index k_tx() const noexcept { return h11.cols(); }
        Index streams() const noexcept { return powers.size(); }

        void validate() const;

        // N noise I + K1 Phi K1^H
        ComplexMatrix interference_covariance() const;
    };

    struct CapacityBounds
    {
        double lower = 0.0;
        double exact = 0.0;
        double upper = 0.0;
    };

    // How the lower bound realises the random rotation of the reduced observation.
    enum class LowerBoundMode
    {
        // Rotate by U1^H, keep rows {i, M+1, ..., N}, apply a Haar unitary.
        literal,
        // Reuse the kept rows and draw the unit vector isotropically. Equal in distribution to
        // `literal` but not a per-realisation bound.
        isotropic
    };

    struct AsymptoticPrediction
    {
        double beta = 0.0;
        std::vector<double> lambda_star;
        std::vector<double> per_stream_sinr;
        double total = 0.0;
    };

    // Parameters of the closed-form spatial predictions. link_rank is A = pi rho r_1^2.
    struct SpatialLinkParams
    {
        double link_rank = 1.0;
        double alpha = 4.0;
        PowerModel model;
        int n_rx = 1;
        int k_tx = 1;

        void validate() const;
    };

    // V diag(P_1..P_M, 0, ..) V^H
    ComplexMatrix tx_covariance(const SvdResult &svd, std::span<const double> powers);

    double exact_capacity(const LinkRealization &link);
    double upper_bound_capacity(const LinkRealization &link);
    double lower_bound_capacity(const LinkRealization &link, SeedSpec seed,
                                LowerBoundMode mode = LowerBoundMode::literal);

    // All three, sharing one SVD and one factorisation of the interference covariance.
    CapacityBounds capacity_bounds(const LinkRealization &link, SeedSpec seed,
                                   LowerBoundMode mode = LowerBoundMode::literal);

    // N x nM matrix whose block for interferer i is H_i1 V_i[:, :M], where V_i comes from the SVD
    // of the interferer's own N x K link channel. Distributed as an IID CN(0,1) matrix.
    ComplexMatrix precoded_interference_channels(Index n_rx, Index k_tx, Index streams, Index interferers, Rng &rng);

    // sum_j log2(1 + lambda*_j P_j gamma1 beta) with lambda*_j from the MP quantile rule.
    AsymptoticPrediction asymptotic_capacity(double beta, std::span<const double> powers, double gamma1, int n_rx,
                                             int k_tx);

    // ((alpha / 2 pi) sin(2 pi / alpha))^(alpha/2)
    double g_alpha(double alpha);

    // Limit of the N^(alpha/2)-normalised spectral efficiency.
    double spatial_capacity_normalized(const SpatialLinkParams &p);

    // Estimate of the mean un-normalised spectral efficiency.
    double spatial_mean_capacity(const SpatialLinkParams &p);

    // Mean spectral efficiency without Tx-Link CSI.
    double no_csi_mean_capacity(double link_rank, int n_rx, int streams, double alpha);

    // spatial_mean_capacity / no_csi_mean_capacity, equal power P = 1/M.
    double csi_gain_ratio(double link_rank, int n_rx, int k_tx, int streams, double alpha);
}

#endif
