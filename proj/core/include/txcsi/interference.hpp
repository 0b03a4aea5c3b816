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

#ifndef TXCSI_INTERFERENCE_HPP
#define TXCSI_INTERFERENCE_HPP

#include "txcsi/randmat.hpp"

#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace txcsi
{
    struct PowerAtom
    {
        double value;       // watts (or received watts)
        double probability; // mass at value
    };

    enum class PowerModelKind
    {
        equal_power,
        two_class
    };

    // Per-stream transmit-power law shared by every interferer.
    //
    // equal_power: all M streams carry `per_stream` watts.
    // two_class:   with probability q a node is class one and puts p1 on each of its M streams;
    //              otherwise it is class two and puts p2 on stream 1 only (streams 2..M silent).
    //
    // The representative transmitter always uses the equal-power allocation or, for the
    // two-class model, the class-one allocation.
    struct PowerModel
    {
        PowerModelKind kind = PowerModelKind::equal_power;
        int streams = 1;
        double per_stream = 1.0;
        double p1 = 0.0;
        double p2 = 0.0;
        double q = 1.0;
        double total_cap = 1.0; // P_M, bound on the per-node sum of stream powers

        // cap defaults to the largest per-node total the model can produce.
        static PowerModel equal_power(int streams, double per_stream, std::optional<double> cap = std::nullopt);
        static PowerModel two_class(int streams, double p1, double p2, double q,
                                    std::optional<double> cap = std::nullopt);

        void validate() const;

        // Marginal law of the power on stream j (1-based), zero atom included.
        std::vector<PowerAtom> stream_marginal(int j) const;

        // sum_j E[P_j^exponent], with 0^exponent = 0.
        double sum_stream_moment(double exponent) const;

        // Stream powers P_{1j} of the representative transmitter.
        std::vector<double> representative_powers() const;

        double max_stream_power() const;
    };

    struct ConstantPathLoss
    {
        double gamma; // linear power ratio, common to every interferer
    };

    // Interferers placed IID uniformly in a disk of radius R = sqrt(n / (pi rho)) around the
    // representative receiver; path loss gain * r^-alpha.
    struct SpatialDisk
    {
        double gain = 1.0;  // G_t
        double alpha = 4.0; // path-loss exponent, > 2
        double density = 1e-3;
        int interferers = 0;
        double link_length = 1.0; // r_1

        double radius() const;
        double link_rank() const; // A = pi rho r_1^2
        double link_path_loss() const;
        // b = (pi rho N / n)^(alpha/2): scaled received power at the disk edge per unit G_t P.
        double edge_factor(int n_rx) const;

        // Link length giving link rank A at this density.
        static double link_length_for_rank(double rank, double density);
        // n = round(rho pi R^2)
        static int interferers_in_disk(double density, double radius);
    };

    struct PathLossScenario
    {
        std::variant<ConstantPathLoss, SpatialDisk> geometry;
        // sigma-bar^2: each antenna sees N * noise. The normalised spatial SINR scales it by
        // N^(alpha/2) together with the interferer path losses.
        double noise = 1e-13;

        bool is_spatial() const noexcept { return std::holds_alternative<SpatialDisk>(geometry); }
        const SpatialDisk &spatial() const;
        const ConstantPathLoss &constant() const;
        void validate() const;
    };

    // Empirical distribution function of a finite sample.
    class Edf
    {
    public:
        explicit Edf(std::vector<double> samples);

        double operator()(double x) const;  // fraction <= x
        double left_limit(double x) const;  // fraction < x
        std::size_t size() const noexcept { return sorted_.size(); }
        const std::vector<double> &sorted() const noexcept { return sorted_; }

    private:
        std::vector<double> sorted_;
    };

    // Pareto component: CDF 1 - (scale / x)^shape for x >= scale, zero below.
    struct ParetoComponent
    {
        double weight;
        double scale;
        double shape;
    };

    // Limiting law H of the received interference powers: point masses plus Pareto tails.
    struct InterferenceLaw
    {
        std::vector<PowerAtom> atoms;
        std::vector<ParetoComponent> tails;

        double cdf(double x) const;
        double total_mass() const;
        bool is_atomic() const noexcept { return tails.empty(); }
    };

    std::vector<double> sample_positions(const PathLossScenario &scenario, SeedSpec seed);

    // Constant scenario: gamma regardless of r. Spatial: G_t r^-alpha.
    double path_loss(double r, const PathLossScenario &scenario);

    // n x M matrix of stream powers; rows are independent nodes.
    Eigen::MatrixXd sample_stream_powers(const PowerModel &model, Index n, SeedSpec seed);
    Eigen::MatrixXd sample_stream_powers(const PowerModel &model, Index n, Rng &rng);

    // Diagonal of Phi: entry i*M + j is path_losses[i] * powers(i, j).
    RealVector build_phi(std::span<const double> path_losses, const Eigen::MatrixXd &powers);

    // Factor applied to interferer path losses and noise before SINR evaluation: N^(alpha/2)
    // for the spatial model, 1 otherwise.
    double interference_scale(const PathLossScenario &scenario, int n_rx);

    // H as a mixture. Spatial scenarios describe the N^(alpha/2)-scaled powers.
    InterferenceLaw limiting_interference_law(const PowerModel &model, const PathLossScenario &scenario, int n_rx);

    double analytic_H(const PowerModel &model, const PathLossScenario &scenario, double x, int n_rx);

    // One realisation of the Phi entries for n interferers; sup over sample points of
    // |H_n - H|, both sides of every jump included.
    double empirical_vs_analytic_distance(const PowerModel &model, const PathLossScenario &scenario, Index n,
                                          int n_rx, SeedSpec seed);
}

#endif
