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

#include "txcsi/montecarlo.hpp"
#include "txcsi/beta_solver.hpp"
#include "txcsi/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace txcsi
{
    namespace
    {
        constexpr std::array<std::pair<ExperimentId, std::string_view>, 5> experiment_names{{
            {ExperimentId::const_equal, "const-equal"},
            {ExperimentId::const_two_class, "const-two-class"},
            {ExperimentId::spatial_equal, "spatial-equal"},
            {ExperimentId::spatial_two_class, "spatial-two-class"},
            {ExperimentId::csi_gain, "csi-gain"},
        }};

        // Neumaier compensated sum.
        class CompensatedSum
        {
        public:
            void add(double x) noexcept
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }

            double value() const noexcept { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };

        std::vector<int> int_range(int lo, int hi, int step)
        {
            std::vector<int> out;
            for (int v = lo; v <= hi; v += step)
                out.push_back(v);
            return out;
        }

        template <class F>
        void parallel_for(int count, int threads, F &&body)
        {
            const int workers = std::max(1, std::min(threads, count));
            if (workers == 1)
            {
                for (int i = 0; i < count; ++i)
                    body(i);
                return;
            }
            std::atomic<int> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (int i = next++; i < count; i = next++)
                    {
                        try
                        {
                            body(i);
                        }
                        catch (...)
                        {
                            const std::lock_guard lock(failure_mutex);
                            if (!failure)
                                failure = std::current_exception();
                        }
                    }
                });
            for (auto &t : pool)
                t.join();
            if (failure)
                std::rethrow_exception(failure);
        }

        ExperimentResult run_monte_carlo(const ExperimentConfig &config)
        {
            ExperimentResult result;
            for (const int n_rx : config.n_rx)
                for (const double n_value : config.n_values)
                    for (const int streams : config.streams)
                    {
                        const int k_tx = config.resolve_k(n_rx);
                        const int n = config.resolve_interferers(n_rx, n_value);
                        const SeedSpec cell = cell_seed(config.root_seed, n_rx, k_tx, streams, n);

                        std::vector<CapacityBounds> bounds(static_cast<std::size_t>(config.trials));
                        parallel_for(config.trials, config.threads, [&](int t) {
                            bounds[static_cast<std::size_t>(t)] =
                                simulate_trial(config, n_rx, k_tx, streams, n, cell.child(static_cast<std::uint64_t>(t)));
                        });

                        std::vector<TrialRecord> records;
                        records.reserve(bounds.size());
                        for (int t = 0; t < config.trials; ++t)
                        {
                            const auto &b = bounds[static_cast<std::size_t>(t)];
                            records.push_back({config.experiment, n_rx, k_tx, streams, n, t,
                                               cell.child(static_cast<std::uint64_t>(t)).derived(), b.exact, b.upper,
                                               b.lower, config.is_spatial() && config.normalized});
                        }
                        result.stats.push_back(aggregate(records, cell_asymptote(config, n_rx, k_tx, streams, n)));
                        result.trials.insert(result.trials.end(), records.begin(), records.end());
                    }
            return result;
        }
    }

    std::string_view to_string(ExperimentId id) noexcept
    {
        for (const auto &[key, name] : experiment_names)
            if (key == id)
                return name;
        return "unknown";
    }

    std::optional<ExperimentId> parse_experiment_id(std::string_view text) noexcept
    {
        for (const auto &[key, name] : experiment_names)
            if (name == text)
                return key;
        return std::nullopt;
    }

    const std::vector<ExperimentId> &all_experiments() noexcept
    {
        static const std::vector<ExperimentId> ids{ExperimentId::const_equal, ExperimentId::const_two_class,
                                                   ExperimentId::spatial_equal, ExperimentId::spatial_two_class,
                                                   ExperimentId::csi_gain};
        return ids;
    }

    // ---------- ExperimentConfig ----------

    ExperimentConfig ExperimentConfig::defaults(ExperimentId id, bool paper_scale)
    {
        ExperimentConfig c;
        c.experiment = id;
        c.trials = paper_scale ? 1000 : 200;
        c.n_rx = paper_scale ? int_range(8, 40, 4) : std::vector<int>{8, 12, 16, 24, 32};
        c.streams = {1, 2, 4, 8};
        c.normalized = false;
        switch (id)
        {
        case ExperimentId::const_equal:
            c.n_rule = NRule::ratio;
            c.n_values = {1.0, 4.0};
            break;
        case ExperimentId::const_two_class:
            c.n_rule = NRule::fixed;
            c.n_values = {128.0};
            break;
        case ExperimentId::spatial_equal:
        case ExperimentId::spatial_two_class:
            c.n_rule = NRule::fixed;
            c.n_values = {paper_scale ? 1000.0 : 500.0};
            c.normalized = true;
            break;
        case ExperimentId::csi_gain:
            c.n_rx = {12};
            c.n_rule = NRule::fixed;
            c.n_values = {1.0};
            c.trials = 1;
            c.link_ranks.clear();
            for (int i = 1; i <= 32; ++i)
                c.link_ranks.push_back(0.5 * i);
            break;
        }
        return c;
    }

    bool ExperimentConfig::is_spatial() const noexcept
    {
        return experiment == ExperimentId::spatial_equal || experiment == ExperimentId::spatial_two_class ||
               experiment == ExperimentId::csi_gain;
    }

    bool ExperimentConfig::is_two_class() const noexcept
    {
        return experiment == ExperimentId::const_two_class || experiment == ExperimentId::spatial_two_class;
    }

    void ExperimentConfig::validate() const
    {
        if (trials < 1)
            throw validation_error("trials", "trials >= 1");
        if (threads < 1)
            throw validation_error("threads", "threads >= 1");
        if (n_rx.empty())
            throw validation_error("N", "at least one N");
        if (streams.empty())
            throw validation_error("M", "at least one M");
        if (n_values.empty())
            throw validation_error("n", "at least one n value");
        if (k_rule == KRule::fixed && k_fixed < 1)
            throw validation_error("K", "K >= 1");
        for (const int m : streams)
            if (m < 1)
                throw validation_error("M", "M >= 1");
        for (const int n : n_rx)
        {
            if (n < 1)
                throw validation_error("N", "N >= 1");
            const int k = resolve_k(n);
            if (k > n)
                throw validation_error("K", "K <= N for every N");
            for (const int m : streams)
                if (m > k)
                    throw validation_error("M", "M <= K for every N");
        }
        for (const double v : n_values)
            if (!(v >= 0.0) || (n_rule == NRule::fixed && v != std::floor(v)))
                throw validation_error("n", "n values must be non-negative (whole numbers for a fixed n)");
        if (experiment != ExperimentId::csi_gain)
            for (const int n : n_rx)
                for (const double v : n_values)
                    if (is_spatial() && resolve_interferers(n, v) < 1)
                        throw validation_error("n", "spatial experiments need n >= 1");

        if (is_spatial() ? !(noise >= 0.0) : !(noise > 0.0))
            throw validation_error("noise", is_spatial() ? "noise >= 0" : "noise > 0");
        if (!(gamma > 0.0))
            throw validation_error("gamma", "gamma > 0");
        if (!(gamma1 > 0.0))
            throw validation_error("gamma1", "gamma1 > 0");
        if (!(p1 > 0.0 && p2 > 0.0))
            throw validation_error("p1", "class powers > 0");
        if (!(q >= 0.0 && q <= 1.0))
            throw validation_error("q", "0 <= q <= 1");
        if (!(density > 0.0))
            throw validation_error("density", "density > 0");
        if (!(alpha > 2.0))
            throw validation_error("alpha", "alpha > 2");
        if (!(gain > 0.0))
            throw validation_error("gain", "gain > 0");
        if (!(link_rank > 0.0))
            throw validation_error("A", "A > 0");
        if (experiment == ExperimentId::csi_gain)
        {
            if (link_ranks.empty())
                throw validation_error("A", "at least one link rank");
            for (const double a : link_ranks)
                if (!(a > 0.0))
                    throw validation_error("A", "A > 0");
        }
    }

    int ExperimentConfig::resolve_k(int n_rx_value) const { return k_rule == KRule::equal_to_n ? n_rx_value : k_fixed; }

    int ExperimentConfig::resolve_interferers(int n_rx_value, double n_value) const
    {
        return n_rule == NRule::ratio ? static_cast<int>(std::lround(n_value * n_rx_value))
                                      : static_cast<int>(n_value);
    }

    PowerModel ExperimentConfig::power_model(int m) const
    {
        return is_two_class() ? PowerModel::two_class(m, p1, p2, q) : PowerModel::equal_power(m, 1.0 / m);
    }

    PathLossScenario ExperimentConfig::scenario(int interferers) const
    {
        PathLossScenario s;
        s.noise = noise;
        if (is_spatial())
        {
            SpatialDisk disk;
            disk.gain = gain;
            disk.alpha = alpha;
            disk.density = density;
            disk.interferers = interferers;
            disk.link_length = SpatialDisk::link_length_for_rank(link_rank, density);
            s.geometry = disk;
        }
        else
            s.geometry = ConstantPathLoss{gamma};
        return s;
    }

    // ---------- Trials ----------

    SeedSpec cell_seed(std::uint64_t root_seed, int n_rx, int k_tx, int streams, int interferers)
    {
        std::uint64_t h = 0;
        for (const int v : {n_rx, k_tx, streams, interferers})
            h = mix64(h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
        return {root_seed, h};
    }

    CapacityBounds simulate_trial(const ExperimentConfig &config, int n_rx, int k_tx, int streams, int interferers,
                                  SeedSpec trial_seed)
    {
        const PowerModel model = config.power_model(streams);
        const PathLossScenario scenario = config.scenario(interferers);

        LinkRealization link;
        link.h11 = sample_cn_matrix(n_rx, k_tx, trial_seed.child(0));
        if (interferers == 0)
            link.k1 = ComplexMatrix(n_rx, 0);
        else if (config.precoded_interferers)
        {
            Rng rng(trial_seed.child(1));
            link.k1 = precoded_interference_channels(n_rx, k_tx, streams, interferers, rng);
        }
        else
            link.k1 = sample_cn_matrix(n_rx, static_cast<Index>(interferers) * streams, trial_seed.child(1));

        const Eigen::MatrixXd powers = sample_stream_powers(model, interferers, trial_seed.child(2));
        std::vector<double> losses;
        if (scenario.is_spatial())
        {
            const double scale = config.normalized ? interference_scale(scenario, n_rx) : 1.0;
            losses = sample_positions(scenario, trial_seed.child(3));
            for (auto &r : losses)
                r = scale * path_loss(r, scenario);
            link.gamma1 = scenario.spatial().link_path_loss();
            link.noise = config.normalized ? config.noise * scale : config.noise;
        }
        else
        {
            losses.assign(static_cast<std::size_t>(interferers), config.gamma);
            link.gamma1 = config.gamma1;
            link.noise = config.noise;
        }
        link.phi = build_phi(losses, powers);

        const std::vector<double> rep = model.representative_powers();
        link.powers = Eigen::Map<const RealVector>(rep.data(), static_cast<Index>(rep.size()));
        return capacity_bounds(link, trial_seed.child(4), config.lower_mode);
    }

    double cell_asymptote(const ExperimentConfig &config, int n_rx, int k_tx, int streams, int interferers)
    {
        const PowerModel model = config.power_model(streams);
        if (config.is_spatial())
        {
            SpatialLinkParams p;
            p.link_rank = config.link_rank;
            p.alpha = config.alpha;
            p.model = model;
            p.n_rx = n_rx;
            p.k_tx = k_tx;
            return config.normalized ? spatial_capacity_normalized(p) : spatial_mean_capacity(p);
        }
        const double c = static_cast<double>(interferers) * streams / n_rx;
        const double beta =
            config.is_two_class()
                ? beta_two_class(two_class_coefficients(c, config.noise, config.gamma, config.p1, config.p2, config.q,
                                                        streams))
                : beta_equal_power(c, config.noise, model.per_stream, config.gamma);
        return asymptotic_capacity(beta, model.representative_powers(), config.gamma1, n_rx, k_tx).total;
    }

    ExperimentResult run_constant_pathloss(const ExperimentConfig &config)
    {
        config.validate();
        if (config.is_spatial())
            throw invalid_argument("run_constant_pathloss: experiment " + std::string(to_string(config.experiment)) +
                                   " is not a constant path-loss experiment");
        return run_monte_carlo(config);
    }

    ExperimentResult run_spatial(const ExperimentConfig &config)
    {
        config.validate();
        if (!config.is_spatial() || config.experiment == ExperimentId::csi_gain)
            throw invalid_argument("run_spatial: experiment " + std::string(to_string(config.experiment)) +
                                   " is not a spatial experiment");
        return run_monte_carlo(config);
    }

    ExperimentResult run_csi_gain(const ExperimentConfig &config)
    {
        config.validate();
        if (config.experiment != ExperimentId::csi_gain)
            throw invalid_argument("run_csi_gain: wrong experiment id");
        ExperimentResult result;
        for (const int n_rx : config.n_rx)
            for (const int streams : config.streams)
                for (const double a : config.link_ranks)
                {
                    CsiGainRow row;
                    row.link_rank = a;
                    row.n_rx = n_rx;
                    row.k_tx = config.resolve_k(n_rx);
                    row.streams = streams;
                    row.alpha = config.alpha;
                    SpatialLinkParams p;
                    p.link_rank = a;
                    p.alpha = config.alpha;
                    p.model = PowerModel::equal_power(streams, 1.0 / streams);
                    p.n_rx = n_rx;
                    p.k_tx = row.k_tx;
                    row.cap_csi = spatial_mean_capacity(p);
                    row.cap_nocsi = no_csi_mean_capacity(a, n_rx, streams, config.alpha);
                    row.ratio = row.cap_csi / row.cap_nocsi;
                    result.csi_gain.push_back(row);
                }
        return result;
    }

    ExperimentResult run_experiment(const ExperimentConfig &config)
    {
        switch (config.experiment)
        {
        case ExperimentId::const_equal:
        case ExperimentId::const_two_class:
            return run_constant_pathloss(config);
        case ExperimentId::spatial_equal:
        case ExperimentId::spatial_two_class:
            return run_spatial(config);
        case ExperimentId::csi_gain:
            return run_csi_gain(config);
        }
        throw invalid_argument("run_experiment: unknown experiment");
    }

    // ---------- Statistics ----------

    AggregateStats aggregate(const std::vector<TrialRecord> &trials, double asymptote)
    {
        if (trials.empty())
            throw invalid_argument("aggregate: no trials");
        const auto count = static_cast<double>(trials.size());
        CompensatedSum sum;
        for (const auto &t : trials)
            sum.add(t.cap_exact);
        const double mean = sum.value() / count;

        CompensatedSum squares;
        double worst = 0.0;
        for (const auto &t : trials)
        {
            const double d = t.cap_exact - mean;
            squares.add(d * d);
            worst = std::max(worst, std::abs(t.cap_exact - asymptote));
        }

        AggregateStats s;
        const TrialRecord &first = trials.front();
        s.experiment = first.experiment;
        s.n_rx = first.n_rx;
        s.k_tx = first.k_tx;
        s.streams = first.streams;
        s.interferers = first.interferers;
        s.trials = static_cast<int>(trials.size());
        s.mean = mean;
        s.std_dev = trials.size() > 1 ? std::sqrt(squares.value() / (count - 1.0))
                                      : std::numeric_limits<double>::quiet_NaN();
        s.asymptote = asymptote;
        s.rel_dev_mean = std::abs(mean - asymptote) / std::abs(asymptote);
        s.rel_dev_max = worst / std::abs(asymptote);
        return s;
    }

    ConvergenceReport convergence_report(std::vector<AggregateStats> stats)
    {
        if (stats.size() < 2)
            throw invalid_argument("convergence_report: needs statistics for at least two values of N");
        std::sort(stats.begin(), stats.end(),
                  [](const AggregateStats &a, const AggregateStats &b) { return a.n_rx < b.n_rx; });
        ConvergenceReport report;
        for (const auto &s : stats)
            report.rows.push_back({s.n_rx, s.rel_dev_max, s.rel_dev_mean, s.std_dev, s.rel_dev_max < 0.15,
                                   s.rel_dev_max < 0.10});
        constexpr double slack = 1.25;
        const auto &last = report.rows.back();
        const auto &second = report.rows[report.rows.size() - 2];
        report.std_non_increasing = last.std_dev <= slack * second.std_dev;
        report.deviation_decreasing = last.rel_dev_max <= slack * report.rows.front().rel_dev_max;
        return report;
    }
}
