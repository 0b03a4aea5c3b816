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

#include "txcsi/cli/config.hpp"
#include "txcsi/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace txcsi::cli
{
    namespace
    {
        std::string_view trim(std::string_view s)
        {
            const auto first = s.find_first_not_of(" \t\r\n");
            if (first == std::string_view::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        std::vector<std::string_view> split(std::string_view s, char sep)
        {
            std::vector<std::string_view> out;
            std::size_t start = 0;
            while (true)
            {
                const auto pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos - start)));
                if (pos == std::string_view::npos)
                    return out;
                start = pos + 1;
            }
        }

        bool is_known_key(std::string_view key)
        {
            const auto &keys = config_keys();
            return std::find(keys.begin(), keys.end(), key) != keys.end();
        }

        double to_double(const std::string &field, std::string_view text)
        {
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
                throw validation_error(field, "'" + std::string(text) + "' is not a number");
            return v;
        }

        std::vector<double> to_doubles(const std::string &field, std::string_view text)
        {
            std::vector<double> out;
            for (const auto item : split(text, ','))
            {
                const auto dots = item.find("..");
                if (dots == std::string_view::npos)
                {
                    out.push_back(to_double(field, item));
                    continue;
                }
                const auto colon = item.find(':', dots);
                const double lo = to_double(field, trim(item.substr(0, dots)));
                const double hi = to_double(field, trim(item.substr(dots + 2, colon - dots - 2)));
                const double step =
                    colon == std::string_view::npos ? 1.0 : to_double(field, trim(item.substr(colon + 1)));
                if (!(step > 0.0))
                    throw validation_error(field, "range step must be > 0");
                if (hi < lo)
                    throw validation_error(field, "range upper end below lower end");
                const auto count = static_cast<long>(std::floor((hi - lo) / step * (1.0 + 1e-12))) + 1;
                if (count > 1000000)
                    throw validation_error(field, "range has too many points");
                for (long i = 0; i < count; ++i)
                    out.push_back(lo + static_cast<double>(i) * step);
            }
            return out;
        }

        int to_int(const std::string &field, double v)
        {
            if (v != std::floor(v) || std::abs(v) > 1e9)
                throw validation_error(field, "expected a whole number, got " + format_double(v));
            return static_cast<int>(v);
        }

        std::vector<int> to_ints(const std::string &field, std::string_view text)
        {
            std::vector<int> out;
            for (const double v : to_doubles(field, text))
                out.push_back(to_int(field, v));
            return out;
        }

        double to_scalar(const std::string &field, std::string_view text)
        {
            const auto values = to_doubles(field, text);
            if (values.size() != 1)
                throw validation_error(field, "expected a single value");
            return values.front();
        }

        bool to_bool(const std::string &field, std::string_view text)
        {
            if (text == "true" || text == "1" || text == "yes")
                return true;
            if (text == "false" || text == "0" || text == "no")
                return false;
            throw validation_error(field, "expected true or false, got '" + std::string(text) + "'");
        }

        ExperimentId to_experiment(std::string_view text)
        {
            const auto id = parse_experiment_id(text);
            if (!id)
                throw validation_error("experiment", "unknown experiment id '" + std::string(text) +
                                                         "'; valid ids: " + valid_experiment_ids());
            return *id;
        }

        template <class T>
        std::string join(const std::vector<T> &values)
        {
            std::string out;
            for (const auto &v : values)
            {
                if (!out.empty())
                    out += ',';
                if constexpr (std::is_same_v<T, double>)
                    out += format_double(v);
                else
                    out += std::to_string(v);
            }
            return out;
        }

        void apply(ExperimentConfig &c, const std::string &key, std::string_view value)
        {
            if (key == "N")
                c.n_rx = to_ints(key, value);
            else if (key == "K")
            {
                if (value == "N")
                    c.k_rule = KRule::equal_to_n;
                else
                {
                    c.k_rule = KRule::fixed;
                    c.k_fixed = to_int(key, to_scalar(key, value));
                }
            }
            else if (key == "M")
                c.streams = to_ints(key, value);
            else if (key == "n")
            {
                c.n_rule = NRule::fixed;
                c.n_values.clear();
                for (const int v : to_ints(key, value))
                    c.n_values.push_back(v);
            }
            else if (key == "n_ratio")
            {
                c.n_rule = NRule::ratio;
                c.n_values = to_doubles(key, value);
            }
            else if (key == "trials")
                c.trials = to_int(key, to_scalar(key, value));
            else if (key == "threads")
                c.threads = to_int(key, to_scalar(key, value));
            else if (key == "seed")
            {
                std::uint64_t v = 0;
                const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
                if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
                    throw validation_error(key, "expected an unsigned 64-bit integer");
                c.root_seed = v;
            }
            else if (key == "noise")
                c.noise = to_scalar(key, value);
            else if (key == "gamma")
                c.gamma = to_scalar(key, value);
            else if (key == "gamma_db")
                c.gamma = std::pow(10.0, to_scalar(key, value) / 10.0);
            else if (key == "gamma1")
                c.gamma1 = to_scalar(key, value);
            else if (key == "gamma1_db")
                c.gamma1 = std::pow(10.0, to_scalar(key, value) / 10.0);
            else if (key == "p1")
                c.p1 = to_scalar(key, value);
            else if (key == "p2")
                c.p2 = to_scalar(key, value);
            else if (key == "q")
                c.q = to_scalar(key, value);
            else if (key == "density")
                c.density = to_scalar(key, value);
            else if (key == "alpha")
                c.alpha = to_scalar(key, value);
            else if (key == "gain")
                c.gain = to_scalar(key, value);
            else if (key == "A")
            {
                if (c.experiment == ExperimentId::csi_gain)
                    c.link_ranks = to_doubles(key, value);
                else
                    c.link_rank = to_scalar(key, value);
            }
            else if (key == "normalized")
                c.normalized = to_bool(key, value);
            else if (key == "precoded")
                c.precoded_interferers = to_bool(key, value);
            else if (key == "lower_bound")
            {
                if (value == "literal")
                    c.lower_mode = LowerBoundMode::literal;
                else if (value == "isotropic")
                    c.lower_mode = LowerBoundMode::isotropic;
                else
                    throw validation_error(key, "expected literal or isotropic");
            }
            else
                throw parse_error("unknown key '" + key + "'", 0);
        }
    }

    const std::vector<std::string> &config_keys()
    {
        static const std::vector<std::string> keys{
            "experiment", "paper_scale", "N",       "K",      "M",     "n",         "n_ratio",    "trials",
            "seed",       "threads",     "noise",   "gamma",  "gamma_db", "gamma1", "gamma1_db", "p1",
            "p2",         "q",           "density", "alpha",  "gain",  "A",         "normalized", "precoded",
            "lower_bound"};
        return keys;
    }

    std::vector<Setting> parse_settings(std::string_view text)
    {
        std::vector<Setting> out;
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size())
        {
            ++line_no;
            const auto end = text.find('\n', start);
            std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
            start = end == std::string_view::npos ? text.size() + 1 : end + 1;

            if (const auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string_view::npos)
                throw parse_error("expected key=value, got '" + std::string(line) + "'", line_no);
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (key.empty())
                throw parse_error("missing key before '='", line_no);
            if (!is_known_key(key))
                throw parse_error("unknown key '" + key + "'", line_no);
            if (value.empty())
                throw parse_error("missing value for key '" + key + "'", line_no);
            out.emplace_back(key, value);
        }
        return out;
    }

    ExperimentConfig resolve_config(const std::vector<Setting> &settings, const std::vector<Setting> &overrides)
    {
        std::vector<Setting> all = settings;
        all.insert(all.end(), overrides.begin(), overrides.end());

        std::optional<ExperimentId> id;
        bool paper_scale = false;
        for (const auto &[key, value] : all)
        {
            if (!is_known_key(key))
                throw parse_error("unknown key '" + key + "'", 0);
            if (key == "experiment")
                id = to_experiment(value);
            else if (key == "paper_scale")
                paper_scale = to_bool(key, value);
        }
        if (!id)
            throw validation_error("experiment", "no experiment selected; valid ids: " + valid_experiment_ids());

        ExperimentConfig config = ExperimentConfig::defaults(*id, paper_scale);
        for (const auto &[key, value] : all)
            if (key != "experiment" && key != "paper_scale")
                apply(config, key, value);
        config.validate();
        return config;
    }

    ExperimentConfig parse_config(std::string_view text, const std::vector<Setting> &overrides)
    {
        return resolve_config(parse_settings(text), overrides);
    }

    ExperimentConfig parse_config_file(const std::filesystem::path &path, const std::vector<Setting> &overrides)
    {
        std::ifstream in(path);
        if (!in)
            throw io_error("cannot read config file " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_config(buffer.str(), overrides);
    }

    std::string config_echo(const ExperimentConfig &c)
    {
        std::ostringstream out;
        out << "experiment=" << to_string(c.experiment) << '\n';
        out << "N=" << join(c.n_rx) << '\n';
        out << "K=" << (c.k_rule == KRule::equal_to_n ? std::string("N") : std::to_string(c.k_fixed)) << '\n';
        out << "M=" << join(c.streams) << '\n';
        out << (c.n_rule == NRule::fixed ? "n=" : "n_ratio=") << join(c.n_values) << '\n';
        out << "trials=" << c.trials << '\n';
        out << "seed=" << c.root_seed << '\n';
        out << "threads=" << c.threads << '\n';
        out << "noise=" << format_double(c.noise) << '\n';
        out << "gamma=" << format_double(c.gamma) << '\n';
        out << "gamma1=" << format_double(c.gamma1) << '\n';
        out << "p1=" << format_double(c.p1) << '\n';
        out << "p2=" << format_double(c.p2) << '\n';
        out << "q=" << format_double(c.q) << '\n';
        out << "density=" << format_double(c.density) << '\n';
        out << "alpha=" << format_double(c.alpha) << '\n';
        out << "gain=" << format_double(c.gain) << '\n';
        out << "A=" << (c.experiment == ExperimentId::csi_gain ? join(c.link_ranks) : format_double(c.link_rank))
            << '\n';
        out << "normalized=" << (c.normalized ? "true" : "false") << '\n';
        out << "precoded=" << (c.precoded_interferers ? "true" : "false") << '\n';
        out << "lower_bound=" << (c.lower_mode == LowerBoundMode::literal ? "literal" : "isotropic") << '\n';
        return out.str();
    }

    bool configs_equal(const ExperimentConfig &a, const ExperimentConfig &b)
    {
        return a.experiment == b.experiment && a.n_rx == b.n_rx && a.k_rule == b.k_rule &&
               (a.k_rule == KRule::equal_to_n || a.k_fixed == b.k_fixed) && a.streams == b.streams &&
               a.n_rule == b.n_rule && a.n_values == b.n_values && a.trials == b.trials && a.noise == b.noise &&
               a.gamma == b.gamma && a.gamma1 == b.gamma1 && a.p1 == b.p1 && a.p2 == b.p2 && a.q == b.q &&
               a.density == b.density && a.alpha == b.alpha && a.gain == b.gain && a.link_rank == b.link_rank &&
               a.normalized == b.normalized && a.link_ranks == b.link_ranks && a.root_seed == b.root_seed &&
               a.precoded_interferers == b.precoded_interferers && a.lower_mode == b.lower_mode &&
               a.threads == b.threads;
    }

    std::string format_double(double v)
    {
        if (std::isnan(v))
            return "NaN";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }

    std::string valid_experiment_ids()
    {
        std::string out;
        for (const auto id : all_experiments())
        {
            if (!out.empty())
                out += ", ";
            out += to_string(id);
        }
        return out;
    }
}
