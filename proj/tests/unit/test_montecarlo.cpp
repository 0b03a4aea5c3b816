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

#include "txcsi/errors.hpp"
#include "txcsi/montecarlo.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace txcsi;

namespace
{
    ExperimentConfig small(ExperimentId id)
    {
        ExperimentConfig c = ExperimentConfig::defaults(id);
        c.n_rx = {4, 8};
        c.streams = {1, 2};
        c.trials = 6;
        if (c.is_spatial())
            c.n_values = {40.0};
        return c;
    }

    TrialRecord record(double cap, int trial = 0)
    {
        return {ExperimentId::const_equal, 4, 4, 1, 4, trial, 0, cap, cap, cap, false};
    }

    AggregateStats stats_at(int n_rx, double rel_dev_max, double std_dev)
    {
        AggregateStats s{};
        s.n_rx = n_rx;
        s.trials = 10;
        s.rel_dev_max = rel_dev_max;
        s.rel_dev_mean = rel_dev_max / 2;
        s.std_dev = std_dev;
        return s;
    }
}

TEST(ExperimentId, RoundTrip)
{
    for (const ExperimentId id : all_experiments())
        EXPECT_EQ(parse_experiment_id(to_string(id)), id);
    EXPECT_FALSE(parse_experiment_id("const-equals").has_value());
    EXPECT_EQ(all_experiments().size(), 5u);
}

TEST(ExperimentConfig, ConstantDefaults)
{
    const ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::const_equal);
    EXPECT_EQ(c.noise, 1e-13);
    EXPECT_NEAR(10.0 * std::log10(c.gamma), -125.0, 1e-12);
    EXPECT_NEAR(10.0 * std::log10(c.gamma1), -100.0, 1e-12);
    EXPECT_EQ(c.n_values, (std::vector<double>{1.0, 4.0}));
    EXPECT_EQ(c.streams, (std::vector<int>{1, 2, 4, 8}));
    EXPECT_EQ(c.k_rule, KRule::equal_to_n);
    EXPECT_EQ(c.power_model(4).per_stream, 0.25);

    const ExperimentConfig t = ExperimentConfig::defaults(ExperimentId::const_two_class);
    EXPECT_EQ(t.n_rule, NRule::fixed);
    EXPECT_EQ(t.resolve_interferers(32, t.n_values[0]), 128);
    const PowerModel m = t.power_model(4);
    EXPECT_EQ(m.p1, 0.5);
    EXPECT_EQ(m.p2, 1.0);
    EXPECT_EQ(m.q, 0.5);
}

TEST(ExperimentConfig, SpatialDefaults)
{
    const ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::spatial_two_class);
    EXPECT_EQ(c.density, 1e-3);
    EXPECT_EQ(c.link_rank, 1.0);
    EXPECT_EQ(c.alpha, 4.0);
    EXPECT_TRUE(c.normalized);
    EXPECT_EQ(c.resolve_interferers(16, c.n_values[0]), 500);
    EXPECT_EQ(ExperimentConfig::defaults(ExperimentId::spatial_equal, true).resolve_interferers(16, 1000.0), 1000);
    EXPECT_EQ(ExperimentConfig::defaults(ExperimentId::const_equal, true).trials, 1000);
    const SpatialDisk &d = c.scenario(500).spatial();
    EXPECT_NEAR(d.link_rank(), 1.0, 1e-12);
}

TEST(ExperimentConfig, Validation)
{
    ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::const_equal);
    c.trials = 0;
    try
    {
        c.validate();
        FAIL();
    }
    catch (const validation_error &e)
    {
        EXPECT_EQ(e.field(), "trials");
    }
    c = ExperimentConfig::defaults(ExperimentId::const_equal);
    c.n_rx = {2};
    c.streams = {4};
    EXPECT_THROW(c.validate(), validation_error);
    c = ExperimentConfig::defaults(ExperimentId::spatial_equal);
    c.alpha = 2.0;
    EXPECT_THROW(c.validate(), validation_error);
    c = ExperimentConfig::defaults(ExperimentId::spatial_equal);
    c.n_values = {0.0};
    EXPECT_THROW(c.validate(), validation_error);
    c = ExperimentConfig::defaults(ExperimentId::const_two_class);
    c.q = 1.5;
    EXPECT_THROW(c.validate(), validation_error);
    EXPECT_THROW(run_spatial(ExperimentConfig::defaults(ExperimentId::const_equal)), txcsi::invalid_argument);
}

TEST(SimulateTrial, SingleAntennaClosedForm)
{
    ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::const_equal);
    c.n_rx = {1};
    c.streams = {1};
    c.n_rule = NRule::fixed;
    c.n_values = {0.0};
    c.trials = 1;
    const SeedSpec seed = cell_seed(c.root_seed, 1, 1, 1, 0).child(0);
    const CapacityBounds b = simulate_trial(c, 1, 1, 1, 0, seed);
    const double h2 = sample_cn_matrix(1, 1, seed.child(0)).squaredNorm();
    const double expected = std::log2(1.0 + c.gamma1 * h2 / c.noise);
    EXPECT_NEAR(b.exact, expected, 1e-12 * expected);
    EXPECT_NEAR(b.lower, expected, 1e-12 * expected);

    const ExperimentResult r = run_constant_pathloss(c);
    ASSERT_EQ(r.trials.size(), 1u);
    EXPECT_EQ(r.trials[0].cap_exact, b.exact);
    EXPECT_TRUE(std::isnan(r.stats[0].std_dev));
}

TEST(SimulateTrial, SandwichOnEveryRecord)
{
    for (const ExperimentId id : {ExperimentId::const_equal, ExperimentId::const_two_class,
                                  ExperimentId::spatial_equal, ExperimentId::spatial_two_class})
    {
        ExperimentConfig c = small(id);
        if (id == ExperimentId::const_two_class)
            c.n_values = {12.0};
        for (const TrialRecord &t : run_experiment(c).trials)
        {
            EXPECT_LE(t.cap_lower, t.cap_exact + 1e-9);
            EXPECT_LE(t.cap_exact, t.cap_upper + 1e-9);
        }
    }
}

TEST(SimulateTrial, PrecodedInterferersAndIsotropicLowerBound)
{
    ExperimentConfig c = small(ExperimentId::const_equal);
    c.precoded_interferers = true;
    c.lower_mode = LowerBoundMode::isotropic;
    const ExperimentResult r = run_experiment(c);
    EXPECT_EQ(r.trials.size(), 48u);
    for (const TrialRecord &t : r.trials)
    {
        EXPECT_TRUE(std::isfinite(t.cap_lower));
        EXPECT_LE(t.cap_exact, t.cap_upper + 1e-9);
    }
}

TEST(SimulateTrial, NormalisationRescalesSinr)
{
    ExperimentConfig norm = small(ExperimentId::spatial_equal);
    norm.alpha = 3.0;
    ExperimentConfig raw = norm;
    raw.normalized = false;
    for (const int n_rx : {4, 8})
        for (std::uint64_t t = 0; t < 5; ++t)
        {
            const SeedSpec seed{99, t};
            const double eta = std::exp2(simulate_trial(norm, n_rx, n_rx, 1, 40, seed).exact) - 1.0;
            const double sinr = std::exp2(simulate_trial(raw, n_rx, n_rx, 1, 40, seed).exact) - 1.0;
            const double expected = sinr / std::pow(n_rx, 1.5);
            EXPECT_NEAR(eta, expected, 1e-9 * expected);
        }
}

TEST(RunExperiment, Deterministic)
{
    const ExperimentConfig c = small(ExperimentId::spatial_two_class);
    const ExperimentResult a = run_experiment(c);
    const ExperimentResult b = run_experiment(c);
    EXPECT_EQ(a.trials, b.trials);
    ExperimentConfig threaded = c;
    threaded.threads = 3;
    EXPECT_EQ(run_experiment(threaded).trials, a.trials);
}

TEST(RunExperiment, ExtraTrialLeavesOthersUnchanged)
{
    ExperimentConfig c = small(ExperimentId::const_equal);
    const ExperimentResult a = run_experiment(c);
    c.trials += 1;
    const ExperimentResult b = run_experiment(c);
    std::size_t matched = 0;
    for (const TrialRecord &r : a.trials)
        matched += std::count(b.trials.begin(), b.trials.end(), r);
    EXPECT_EQ(matched, a.trials.size());
    EXPECT_EQ(b.trials.size(), a.trials.size() + a.stats.size());
}

TEST(RunExperiment, SeedChangesOutput)
{
    ExperimentConfig c = small(ExperimentId::const_equal);
    const ExperimentResult a = run_experiment(c);
    c.root_seed = 2;
    EXPECT_NE(run_experiment(c).trials, a.trials);
}

TEST(RunExperiment, CellLayout)
{
    const ExperimentConfig c = small(ExperimentId::const_equal);
    const ExperimentResult r = run_experiment(c);
    EXPECT_EQ(r.stats.size(), 2u * 2u * 2u);
    EXPECT_EQ(r.trials.size(), r.stats.size() * 6u);
    for (const AggregateStats &s : r.stats)
    {
        EXPECT_EQ(s.trials, 6);
        EXPECT_EQ(s.k_tx, s.n_rx);
        EXPECT_NEAR(s.asymptote, cell_asymptote(c, s.n_rx, s.k_tx, s.streams, s.interferers), 0.0);
    }
}

TEST(RunExperiment, CsiGainRows)
{
    ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::csi_gain);
    c.streams = {2};
    const ExperimentResult r = run_experiment(c);
    ASSERT_EQ(r.csi_gain.size(), 32u);
    EXPECT_TRUE(r.trials.empty());
    for (const CsiGainRow &row : r.csi_gain)
    {
        EXPECT_NEAR(row.ratio, csi_gain_ratio(row.link_rank, 12, 12, 2, 4.0), 1e-12);
        EXPECT_NEAR(row.ratio, row.cap_csi / row.cap_nocsi, 1e-12);
    }
}

TEST(RunExperiment, ConstantEqualPowerConverges)
{
    ExperimentConfig c = ExperimentConfig::defaults(ExperimentId::const_equal);
    c.n_rx = {16};
    c.streams = {2};
    c.n_values = {1.0};
    const ExperimentResult r = run_experiment(c);
    ASSERT_EQ(r.stats.size(), 1u);
    EXPECT_LT(r.stats[0].rel_dev_mean, 0.15);
}

TEST(Aggregate, ConstantValues)
{
    std::vector<TrialRecord> v;
    for (int i = 0; i < 5; ++i)
        v.push_back(record(2.0, i));
    const AggregateStats s = aggregate(v, 2.0);
    EXPECT_EQ(s.mean, 2.0);
    EXPECT_EQ(s.std_dev, 0.0);
    EXPECT_EQ(s.rel_dev_mean, 0.0);
    EXPECT_EQ(s.rel_dev_max, 0.0);
    EXPECT_EQ(s.trials, 5);
}

TEST(Aggregate, KnownValues)
{
    const std::vector<TrialRecord> v{record(1.0), record(2.0), record(3.0), record(6.0)};
    const AggregateStats s = aggregate(v, 2.0);
    EXPECT_DOUBLE_EQ(s.mean, 3.0);
    EXPECT_DOUBLE_EQ(s.std_dev, std::sqrt(14.0 / 3.0));
    EXPECT_DOUBLE_EQ(s.rel_dev_mean, 0.5);
    EXPECT_DOUBLE_EQ(s.rel_dev_max, 2.0);
}

TEST(Aggregate, OrderIndependent)
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> dist(0.0, 20.0);
    std::vector<TrialRecord> v;
    for (int i = 0; i < 1000; ++i)
        v.push_back(record(dist(gen), i));
    const AggregateStats a = aggregate(v, 10.0);
    std::shuffle(v.begin(), v.end(), gen);
    const AggregateStats b = aggregate(v, 10.0);
    EXPECT_NEAR(a.mean, b.mean, 1e-12 * a.mean);
    EXPECT_NEAR(a.std_dev, b.std_dev, 1e-12 * a.std_dev);
    EXPECT_EQ(a.rel_dev_max, b.rel_dev_max);
}

TEST(Aggregate, Degenerate)
{
    EXPECT_TRUE(std::isnan(aggregate({record(1.0)}, 1.0).std_dev));
    EXPECT_THROW(aggregate({}, 1.0), txcsi::invalid_argument);
}

TEST(Convergence, FlagsAndOrdering)
{
    const ConvergenceReport r =
        convergence_report({stats_at(32, 0.05, 0.10), stats_at(8, 0.20, 0.30), stats_at(16, 0.12, 0.11)});
    ASSERT_EQ(r.rows.size(), 3u);
    EXPECT_EQ(r.rows[0].n_rx, 8);
    EXPECT_EQ(r.rows[2].n_rx, 32);
    EXPECT_FALSE(r.rows[0].within_15);
    EXPECT_TRUE(r.rows[1].within_15);
    EXPECT_FALSE(r.rows[1].within_10);
    EXPECT_TRUE(r.rows[2].within_10);
    EXPECT_TRUE(r.std_non_increasing);
    EXPECT_TRUE(r.deviation_decreasing);

    const ConvergenceReport worse = convergence_report({stats_at(8, 0.05, 0.1), stats_at(16, 0.2, 0.5)});
    EXPECT_FALSE(worse.std_non_increasing);
    EXPECT_FALSE(worse.deviation_decreasing);

    const ConvergenceReport zero = convergence_report({stats_at(8, 0.0, 0.0), stats_at(16, 0.0, 0.0)});
    EXPECT_TRUE(zero.rows[0].within_10);
    EXPECT_TRUE(zero.deviation_decreasing);
}
