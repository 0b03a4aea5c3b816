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

#include "txcsi/cli/run.hpp"
#include "txcsi/cli/catalog.hpp"
#include "txcsi/cli/config.hpp"
#include "txcsi/errors.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>

#ifndef TXCSI_VERSION
#define TXCSI_VERSION "0.0.0"
#endif

namespace txcsi::cli
{
    namespace
    {
        std::string utc_timestamp()
        {
            const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            std::tm tm{};
            gmtime_r(&now, &tm);
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
            return buf;
        }

        template <class Writer>
        void write_file(const std::filesystem::path &path, Writer &&writer)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw io_error("cannot open " + path.string() + " for writing");
            writer(out);
            out.flush();
            if (!out)
                throw io_error("failed writing " + path.string());
        }
    }

    void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &trials)
    {
        out << trials_header << '\n';
        for (const auto &t : trials)
            out << to_string(t.experiment) << ',' << t.n_rx << ',' << t.k_tx << ',' << t.streams << ','
                << t.interferers << ',' << t.trial << ',' << t.seed << ',' << format_double(t.cap_exact) << ','
                << format_double(t.cap_upper) << ',' << format_double(t.cap_lower) << ',' << (t.normalized ? 1 : 0)
                << '\n';
    }

    void write_stats_csv(std::ostream &out, const std::vector<AggregateStats> &stats)
    {
        out << stats_header << '\n';
        for (const auto &s : stats)
            out << to_string(s.experiment) << ',' << s.n_rx << ',' << s.k_tx << ',' << s.streams << ','
                << s.interferers << ',' << s.trials << ',' << format_double(s.mean) << ','
                << format_double(s.std_dev) << ',' << format_double(s.asymptote) << ','
                << format_double(s.rel_dev_mean) << ',' << format_double(s.rel_dev_max) << '\n';
    }

    void write_csi_gain_csv(std::ostream &out, const std::vector<CsiGainRow> &rows)
    {
        out << csi_gain_header << '\n';
        for (const auto &r : rows)
            out << format_double(r.link_rank) << ',' << r.n_rx << ',' << r.k_tx << ',' << r.streams << ','
                << format_double(r.alpha) << ',' << format_double(r.cap_csi) << ',' << format_double(r.cap_nocsi)
                << ',' << format_double(r.ratio) << '\n';
    }

    RunOutputs run_and_write(const ExperimentConfig &config, const std::filesystem::path &out_dir)
    {
        config.validate();
        std::error_code ec;
        std::filesystem::create_directories(out_dir, ec);
        if (ec || !std::filesystem::is_directory(out_dir))
            throw io_error("cannot create output directory " + out_dir.string() +
                           (ec ? ": " + ec.message() : std::string()));

        const std::string id(to_string(config.experiment));
        const std::string started = utc_timestamp();
        const ExperimentResult result = run_experiment(config);

        RunOutputs outputs;
        if (config.experiment == ExperimentId::csi_gain)
        {
            outputs.csv_files.push_back(out_dir / (id + ".csv"));
            write_file(outputs.csv_files[0], [&](std::ostream &o) { write_csi_gain_csv(o, result.csi_gain); });
        }
        else
        {
            outputs.csv_files.push_back(out_dir / (id + "_trials.csv"));
            outputs.csv_files.push_back(out_dir / (id + "_stats.csv"));
            write_file(outputs.csv_files[0], [&](std::ostream &o) { write_trials_csv(o, result.trials); });
            write_file(outputs.csv_files[1], [&](std::ostream &o) { write_stats_csv(o, result.stats); });
        }

        nlohmann::json manifest;
        manifest["tool"] = "txcsi";
        manifest["version"] = version();
        manifest["experiment"] = id;
        manifest["root_seed"] = config.root_seed;
        manifest["started"] = started;
        manifest["finished"] = utc_timestamp();
        manifest["config_echo"] = config_echo(config);
        auto files = nlohmann::json::array();
        for (const auto &p : outputs.csv_files)
            files.push_back(p.string());
        manifest["outputs"] = files;

        outputs.manifest = out_dir / (id + "_manifest.json");
        write_file(outputs.manifest, [&](std::ostream &o) { o << manifest.dump(2) << '\n'; });
        return outputs;
    }

    std::filesystem::path default_out_dir()
    {
        if (const char *env = std::getenv(out_dir_env); env && *env)
            return env;
        return "txcsi-out";
    }

    std::string version() { return TXCSI_VERSION; }

    int main(int argc, char **argv)
    {
        CLI::App app{"txcsi: spectral efficiency of multi-antenna links with Tx-Link CSI"};
        app.set_version_flag("--version", version());
        app.require_subcommand(1);

        CLI::App *list = app.add_subcommand("list", "List experiments with their figure mapping and defaults");
        bool machine = false;
        list->add_flag("--machine", machine, "Emit the catalog as JSON");

        CLI::App *run = app.add_subcommand("run", "Run an experiment and write CSV files plus a manifest");
        std::string experiment;
        std::string config_path;
        std::string out_dir;
        std::vector<std::string> sets;
        bool paper_scale = false;
        run->add_option("-e,--experiment", experiment, "Experiment id (see `txcsi list`)");
        run->add_option("-c,--config", config_path, "key=value configuration file");
        run->add_option("--set", sets, "Extra key=value override; repeatable");
        run->add_flag("--paper-scale", paper_scale, "Full-size defaults: 1000 trials, n = 1000");
        run->add_option("-o,--out", out_dir, std::string("Output directory (default $") + out_dir_env + " or ./txcsi-out)");

        std::map<std::string, std::string> values;
        for (const auto &key : config_keys())
        {
            if (key == "experiment" || key == "paper_scale")
                continue;
            run->add_option("--" + key, values[key], "Config key " + key);
        }

        try
        {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError &e)
        {
            return app.exit(e);
        }

        try
        {
            if (list->parsed())
            {
                std::cout << (machine ? list_experiments_json() : list_experiments());
                return 0;
            }

            std::vector<Setting> settings;
            if (paper_scale)
                settings.emplace_back("paper_scale", "true");
            for (const auto &s : sets)
            {
                const auto eq = s.find('=');
                if (eq == std::string::npos)
                    throw parse_error("--set expects key=value, got '" + s + "'", 0);
                settings.emplace_back(s.substr(0, eq), s.substr(eq + 1));
            }
            for (const auto &key : config_keys())
                if (const auto it = values.find(key); it != values.end() && run->count("--" + key) > 0)
                    settings.emplace_back(key, it->second);
            if (!experiment.empty())
                settings.emplace_back("experiment", experiment);

            const ExperimentConfig config =
                config_path.empty() ? resolve_config(settings) : parse_config_file(config_path, settings);
            const RunOutputs outputs = run_and_write(config, out_dir.empty() ? default_out_dir() : std::filesystem::path(out_dir));
            for (const auto &p : outputs.csv_files)
                std::cout << "wrote " << p.string() << '\n';
            std::cout << "wrote " << outputs.manifest.string() << '\n';
            return 0;
        }
        catch (const parse_error &e)
        {
            std::cerr << "txcsi: parse error: " << e.what() << '\n';
            return 2;
        }
        catch (const validation_error &e)
        {
            std::cerr << "txcsi: invalid " << e.what() << '\n';
            return 2;
        }
        catch (const invalid_argument &e)
        {
            std::cerr << "txcsi: invalid argument: " << e.what() << '\n';
            return 2;
        }
        catch (const numerical_error &e)
        {
            std::cerr << "txcsi: numerical error: " << e.what() << '\n';
            return 3;
        }
        catch (const io_error &e)
        {
            std::cerr << "txcsi: i/o error: " << e.what() << '\n';
            return 4;
        }
    }
}
