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

#include "txcsi/interference.hpp"
#include "txcsi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace txcsi
{
    namespace
    {
        constexpr double pi = std::numbers::pi;

        void merge_atoms(std::vector<PowerAtom> &atoms)
        {
            std::sort(atoms.begin(), atoms.end(), [](const PowerAtom &a, const PowerAtom &b) { return a.value < b.value; });
            std::vector<PowerAtom> merged;
            for (const auto &a : atoms)
            {
                if (a.probability <= 0.0)
                    continue;
                if (!merged.empty() && merged.back().value == a.value)
                    merged.back().probability += a.probability;
                else
                    merged.push_back(a);
            }
            atoms = std::move(merged);
        }
    }

    // ---------- PowerModel ----------

    PowerModel PowerModel::equal_power(int streams, double per_stream, std::optional<double> cap)
    {
        PowerModel m;
        m.kind = PowerModelKind::equal_power;
        m.streams = streams;
        m.per_stream = per_stream;
        m.total_cap = cap.value_or(streams * per_stream);
        m.validate();
        return m;
    }

    PowerModel PowerModel::two_class(int streams, double p1, double p2, double q, std::optional<double> cap)
    {
        PowerModel m;
        m.kind = PowerModelKind::two_class;
        m.streams = streams;
        m.p1 = p1;
        m.p2 = p2;
        m.q = q;
        m.total_cap = cap.value_or(std::max(streams * p1, p2));
        m.validate();
        return m;
    }

    void PowerModel::validate() const
    {
        if (streams < 1)
            throw invalid_argument("PowerModel: streams M must be >= 1");
        // Relative slack so that caps computed as M * P pass for the same M and P.
        const double slack = 1e-12 * std::max(1.0, total_cap);
        if (kind == PowerModelKind::equal_power)
        {
            if (!(per_stream >= 0.0))
                throw invalid_argument("PowerModel: per-stream power must be >= 0");
            if (streams * per_stream > total_cap + slack)
                throw invalid_argument("PowerModel: M * P exceeds the total power cap");
        }
        else
        {
            if (!(p1 >= 0.0 && p2 >= 0.0))
                throw invalid_argument("PowerModel: class powers must be >= 0");
            if (!(q >= 0.0 && q <= 1.0))
                throw invalid_argument("PowerModel: class-one probability q must lie in [0, 1]");
            if (streams * p1 > total_cap + slack || p2 > total_cap + slack)
                throw invalid_argument("PowerModel: class powers exceed the total power cap");
        }
    }

    std::vector<PowerAtom> PowerModel::stream_marginal(int j) const
    {
        if (j < 1 || j > streams)
            throw invalid_argument("stream_marginal: stream index out of range");
        std::vector<PowerAtom> atoms;
        if (kind == PowerModelKind::equal_power)
            atoms.push_back({per_stream, 1.0});
        else
        {
            atoms.push_back({p1, q});
            atoms.push_back({j == 1 ? p2 : 0.0, 1.0 - q});
        }
        merge_atoms(atoms);
        return atoms;
    }

    double PowerModel::sum_stream_moment(double exponent) const
    {
        double total = 0.0;
        for (int j = 1; j <= streams; ++j)
            for (const auto &a : stream_marginal(j))
                if (a.value > 0.0)
                    total += a.probability * std::pow(a.value, exponent);
        return total;
    }

    std::vector<double> PowerModel::representative_powers() const
    {
        return std::vector<double>(static_cast<std::size_t>(streams),
                                   kind == PowerModelKind::equal_power ? per_stream : p1);
    }

    double PowerModel::max_stream_power() const
    {
        return kind == PowerModelKind::equal_power ? per_stream : std::max(p1, p2);
    }

    // ---------- Geometry ----------

    double SpatialDisk::radius() const { return std::sqrt(interferers / (pi * density)); }

    double SpatialDisk::link_rank() const { return pi * density * link_length * link_length; }

    double SpatialDisk::link_path_loss() const { return gain * std::pow(link_length, -alpha); }

    double SpatialDisk::edge_factor(int n_rx) const
    {
        if (interferers < 1)
            throw invalid_argument("SpatialDisk::edge_factor: needs at least one interferer");
        return std::pow(pi * density * n_rx / interferers, alpha / 2.0);
    }

    double SpatialDisk::link_length_for_rank(double rank, double density)
    {
        if (!(rank > 0.0 && density > 0.0))
            throw invalid_argument("link_length_for_rank: rank and density must be positive");
        return std::sqrt(rank / (pi * density));
    }

    int SpatialDisk::interferers_in_disk(double density, double radius)
    {
        return static_cast<int>(std::lround(density * pi * radius * radius));
    }

    const SpatialDisk &PathLossScenario::spatial() const
    {
        if (!is_spatial())
            throw invalid_argument("scenario is not a spatial-disk scenario");
        return std::get<SpatialDisk>(geometry);
    }

    const ConstantPathLoss &PathLossScenario::constant() const
    {
        if (is_spatial())
            throw invalid_argument("scenario is not a constant path-loss scenario");
        return std::get<ConstantPathLoss>(geometry);
    }

    void PathLossScenario::validate() const
    {
        if (!(noise >= 0.0))
            throw invalid_argument("PathLossScenario: noise power must be >= 0");
        if (is_spatial())
        {
            const auto &s = spatial();
            if (!(s.alpha > 2.0))
                throw invalid_argument("PathLossScenario: path-loss exponent alpha must exceed 2");
            if (!(s.density > 0.0))
                throw invalid_argument("PathLossScenario: density rho must be positive");
            if (!(s.gain > 0.0))
                throw invalid_argument("PathLossScenario: gain G_t must be positive");
            if (!(s.link_length > 0.0))
                throw invalid_argument("PathLossScenario: link length r_1 must be positive");
            if (s.interferers < 0)
                throw invalid_argument("PathLossScenario: interferer count must be >= 0");
        }
        else if (!(constant().gamma >= 0.0))
            throw invalid_argument("PathLossScenario: gamma must be >= 0");
    }

    // ---------- Edf ----------

    Edf::Edf(std::vector<double> samples) : sorted_(std::move(samples))
    {
        std::sort(sorted_.begin(), sorted_.end());
    }

    double Edf::operator()(double x) const
    {
        if (sorted_.empty())
            return 0.0;
        const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    double Edf::left_limit(double x) const
    {
        if (sorted_.empty())
            return 0.0;
        const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
    }

    // ---------- InterferenceLaw ----------

    double InterferenceLaw::cdf(double x) const
    {
        double value = 0.0;
        for (const auto &a : atoms)
            if (a.value <= x)
                value += a.probability;
        for (const auto &t : tails)
            if (x >= t.scale)
                value += t.weight * (1.0 - std::pow(t.scale / x, t.shape));
        return std::min(value, 1.0);
    }

    double InterferenceLaw::total_mass() const
    {
        double m = 0.0;
        for (const auto &a : atoms)
            m += a.probability;
        for (const auto &t : tails)
            m += t.weight;
        return m;
    }

    // ---------- Operations ----------

    std::vector<double> sample_positions(const PathLossScenario &scenario, SeedSpec seed)
    {
        const SpatialDisk &disk = scenario.spatial();
        const double radius = disk.radius();
        Rng rng(seed);
        std::vector<double> radii(static_cast<std::size_t>(std::max(disk.interferers, 0)));
        // Pr{r <= t} = t^2 / R^2, so r = R sqrt(U) with U uniform on (0, 1].
        for (auto &r : radii)
            r = radius * std::sqrt(rng.uniform_pos());
        return radii;
    }

    double path_loss(double r, const PathLossScenario &scenario)
    {
        if (!(r > 0.0))
            throw invalid_argument("path_loss: distance must be positive");
        if (!scenario.is_spatial())
            return scenario.constant().gamma;
        const auto &s = scenario.spatial();
        return s.gain * std::pow(r, -s.alpha);
    }

    Eigen::MatrixXd sample_stream_powers(const PowerModel &model, Index n, Rng &rng)
    {
        if (n < 0)
            throw invalid_argument("sample_stream_powers: n must be >= 0");
        const Index m = model.streams;
        Eigen::MatrixXd powers = Eigen::MatrixXd::Zero(n, m);
        if (model.kind == PowerModelKind::equal_power)
        {
            powers.setConstant(model.per_stream);
            return powers;
        }
        for (Index i = 0; i < n; ++i)
        {
            if (rng.uniform() < model.q)
                powers.row(i).setConstant(model.p1);
            else
                powers(i, 0) = model.p2;
        }
        return powers;
    }

    Eigen::MatrixXd sample_stream_powers(const PowerModel &model, Index n, SeedSpec seed)
    {
        Rng rng(seed);
        return sample_stream_powers(model, n, rng);
    }

    RealVector build_phi(std::span<const double> path_losses, const Eigen::MatrixXd &powers)
    {
        if (static_cast<Index>(path_losses.size()) != powers.rows())
            throw invalid_argument("build_phi: " + std::to_string(path_losses.size()) + " path losses but " +
                                   std::to_string(powers.rows()) + " power rows");
        const Index m = powers.cols();
        RealVector phi(powers.rows() * m);
        for (Index i = 0; i < powers.rows(); ++i)
            for (Index j = 0; j < m; ++j)
                phi(i * m + j) = path_losses[static_cast<std::size_t>(i)] * powers(i, j);
        return phi;
    }

    double interference_scale(const PathLossScenario &scenario, int n_rx)
    {
        if (!scenario.is_spatial())
            return 1.0;
        return std::pow(static_cast<double>(n_rx), scenario.spatial().alpha / 2.0);
    }

    InterferenceLaw limiting_interference_law(const PowerModel &model, const PathLossScenario &scenario, int n_rx)
    {
        scenario.validate();
        model.validate();
        if (n_rx < 1)
            throw invalid_argument("limiting_interference_law: n_rx must be >= 1");

        InterferenceLaw law;
        const double per_stream_weight = 1.0 / model.streams;
        if (!scenario.is_spatial())
        {
            const double gamma = scenario.constant().gamma;
            for (int j = 1; j <= model.streams; ++j)
                for (const auto &a : model.stream_marginal(j))
                    law.atoms.push_back({gamma * a.value, a.probability * per_stream_weight});
            merge_atoms(law.atoms);
            return law;
        }

        const SpatialDisk &disk = scenario.spatial();
        const double b = disk.edge_factor(n_rx);
        const double shape = 2.0 / disk.alpha;
        for (int j = 1; j <= model.streams; ++j)
            for (const auto &a : model.stream_marginal(j))
            {
                const double w = a.probability * per_stream_weight;
                if (a.value > 0.0)
                    law.tails.push_back({w, disk.gain * b * a.value, shape});
                else
                    law.atoms.push_back({0.0, w});
            }
        merge_atoms(law.atoms);
        return law;
    }

    double analytic_H(const PowerModel &model, const PathLossScenario &scenario, double x, int n_rx)
    {
        if (!(x >= 0.0))
            throw invalid_argument("analytic_H: x must be >= 0");
        return limiting_interference_law(model, scenario, n_rx).cdf(x);
    }

    double empirical_vs_analytic_distance(const PowerModel &model, const PathLossScenario &scenario, Index n,
                                          int n_rx, SeedSpec seed)
    {
        if (n < 1)
            throw invalid_argument("empirical_vs_analytic_distance: n must be >= 1");

        PathLossScenario sc = scenario;
        std::vector<double> losses;
        if (sc.is_spatial())
        {
            std::get<SpatialDisk>(sc.geometry).interferers = static_cast<int>(n);
            const double scale = interference_scale(sc, n_rx);
            losses = sample_positions(sc, seed.child(0));
            for (auto &r : losses)
                r = scale * path_loss(r, sc);
        }
        else
            losses.assign(static_cast<std::size_t>(n), sc.constant().gamma);

        const Eigen::MatrixXd powers = sample_stream_powers(model, n, seed.child(1));
        const RealVector phi = build_phi(losses, powers);
        const InterferenceLaw law = limiting_interference_law(model, sc, n_rx);

        std::vector<double> values(phi.data(), phi.data() + phi.size());
        std::sort(values.begin(), values.end());
        const double m = static_cast<double>(values.size());
        double sup = 0.0;
        std::size_t i = 0;
        while (i < values.size())
        {
            std::size_t k = i;
            while (k < values.size() && values[k] == values[i])
                ++k;
            const double v = values[i];
            const double below = std::nextafter(v, -std::numeric_limits<double>::infinity());
            sup = std::max(sup, std::abs(static_cast<double>(k) / m - law.cdf(v)));
            sup = std::max(sup, std::abs(static_cast<double>(i) / m - (below < 0.0 ? 0.0 : law.cdf(below))));
            i = k;
        }
        return sup;
    }
}
