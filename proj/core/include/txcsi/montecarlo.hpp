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

#ifndef TXCSI_MONTECARLO_HPP
#define TXCSI_MONTECARLO_HPP

#include "txcsi/capacity.hpp"
#include "txcsi/interference.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace txcsi
{
    enum class ExperimentId
    {
        const_equal,
        const_two_class,
        spatial_equal,
        spatial_two_class,
        csi_gain
    };

    std::string_view to_string(ExperimentId id) noexcept;
    std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept;
    const std::vector<ExperimentId> &all_experiments() noexcept;

    enum class KRule
    {
        equal_to_n,
        fixed
    };

    enum class NRule
    {
        ratio, // n = round(value * N)
        fixed  // n = value
    };

    struct ExperimentConfig
    {
        ExperimentId experiment = ExperimentId::const_equal;

        std::vector<int> n_rx{8, 16, 32}; // N
        KRule k_rule = KRule::equal_to_n;
        int k_fixed = 1;
        std::vector<int> streams{1, 2, 4}; // M
        NRule n_rule = NRule::ratio;
        std::vector<double> n_values{1.0, 4.0};
        int trials = 200;

        double noise = 1e-13;   // sigma-bar^2 (constant) or sigma^2 (spatial)
        double gamma = std::pow(10.0, -12.5); // interferer path loss, -125 dB
        double gamma1 = 1e-10;  // representative path loss, -100 dB
        double p1 = 0.5;
        double p2 = 1.0;
        double q = 0.5;

        double density = 1e-3;
        double alpha = 4.0;
        double gain = 1.0;
        double link_rank = 1.0; // A = pi rho r_1^2
        bool normalized = true; // spatial only: scale interference and noise by N^(alpha/2)

        std::vector<double> link_ranks{1.0, 2.0, 4.0, 8.0, 16.0}; // csi-gain A grid

        std::uint64_t root_seed = 1;
        bool precoded_interferers = false; // simulate each interferer's own precoder
        LowerBoundMode lower_mode = LowerBoundMode::literal;
        int threads = 1;

        static ExperimentConfig defaults(ExperimentId id, bool paper_scale = false);

        bool is_spatial() const noexcept;
        bool is_two_class() const noexcept;

        void validate() const;

        int resolve_k(int n_rx) const;
        int resolve_interferers(int n_rx, double n_value) const;
        PowerModel power_model(int streams) const;
        PathLossScenario scenario(int interferers) const;
    };

    struct TrialRecord
    {
        ExperimentId experiment;
        int n_rx;
        int k_tx;
        int streams;
        int interferers;
        int trial;
        std::uint64_t seed; // derived seed of the trial stream
        double cap_exact;
        double cap_upper;
        double cap_lower;
        bool normalized;

        friend bool operator==(const TrialRecord &, const TrialRecord &) = default;
    };

    struct AggregateStats
    {
        ExperimentId experiment;
        int n_rx;
        int k_tx;
        int streams;
        int interferers;
        int trials;
        double mean;
        double std_dev; // sample standard deviation, NaN for one trial
        double asymptote;
        double rel_dev_mean;
        double rel_dev_max;
    };

    struct CsiGainRow
    {
        double link_rank;
        int n_rx;
        int k_tx;
        int streams;
        double alpha;
        double cap_csi;
        double cap_nocsi;
        double ratio;
    };

    struct ExperimentResult
    {
        std::vector<TrialRecord> trials;
        std::vector<AggregateStats> stats;
        std::vector<CsiGainRow> csi_gain;
    };

    // Seed of one (N, K, M, n) cell; trial t uses cell.child(t).
    SeedSpec cell_seed(std::uint64_t root_seed, int n_rx, int k_tx, int streams, int interferers);

    // One trial. Sub-streams of `trial_seed`: 0 H11, 1 K1, 2 powers, 3 positions, 4 lower bound.
    CapacityBounds simulate_trial(const ExperimentConfig &config, int n_rx, int k_tx, int streams, int interferers,
                                  SeedSpec trial_seed);

    // Asymptotic prediction for one cell.
    double cell_asymptote(const ExperimentConfig &config, int n_rx, int k_tx, int streams, int interferers);

    ExperimentResult run_constant_pathloss(const ExperimentConfig &config);
    ExperimentResult run_spatial(const ExperimentConfig &config);
    ExperimentResult run_csi_gain(const ExperimentConfig &config);
    ExperimentResult run_experiment(const ExperimentConfig &config);

    // Statistics of cap_exact over the records against `asymptote`. Cell fields come from the
    // first record.
    AggregateStats aggregate(const std::vector<TrialRecord> &trials, double asymptote);

    struct ConvergenceRow
    {
        int n_rx;
        double rel_dev_max;
        double rel_dev_mean;
        double std_dev;
        bool within_15;
        bool within_10;
    };

    struct ConvergenceReport
    {
        std::vector<ConvergenceRow> rows; // ascending N
        // std at the largest N <= 1.25 * std at the second largest N
        bool std_non_increasing = false;
        // rel_dev_max at the largest N <= 1.25 * rel_dev_max at the smallest N
        bool deviation_decreasing = false;
    };

    // `stats` holds one series (same M and n rule) across at least two values of N.
    ConvergenceReport convergence_report(std::vector<AggregateStats> stats);
}

#endif
