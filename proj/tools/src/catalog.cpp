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

#include "txcsi/cli/catalog.hpp"
#include "txcsi/cli/config.hpp"
#include "txcsi/cli/run.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace txcsi::cli
{
    const std::vector<CatalogEntry> &catalog()
    {
        static const std::vector<CatalogEntry> entries{
            {ExperimentId::const_equal,
             {2, 3},
             "constant path loss, equal stream powers P = 1/M, n/N in {1, 4}",
             "set n=<count> to hold n fixed instead of n/N"},
            {ExperimentId::const_two_class,
             {4},
             "constant path loss, two-class powers (P1, P2, q) = (0.5, 1, 0.5), n = 128",
             "n is held at 128 as N sweeps; n_ratio=1,4 switches to the per-antenna ratios of const-equal"},
            {ExperimentId::spatial_equal,
             {5, 6, 8, 10},
             "interferers uniform in a disk, equal stream powers, rho = 1e-3, A = 1",
             "normalized=true gives the N^(alpha/2)-scaled SINR (Figures 5, 6); normalized=false the raw mean "
             "(Figure 8); alpha=3 for Figure 10"},
            {ExperimentId::spatial_two_class,
             {7, 9},
             "interferers uniform in a disk, two-class powers (P1, P2, q) = (0.5, 1, 0.5)",
             "normalized=true for Figure 7, normalized=false for Figure 9"},
            {ExperimentId::csi_gain,
             {11},
             "analytic ratio of mean spectral efficiency with and without Tx-Link CSI versus link rank A",
             "no Monte-Carlo; A accepts lists and ranges"},
        };
        return entries;
    }

    std::string figure_label(const std::vector<int> &figures)
    {
        if (figures.empty())
            return "";
        if (figures.size() == 1)
            return "Figure " + std::to_string(figures.front());
        bool consecutive = true;
        for (std::size_t i = 1; i < figures.size(); ++i)
            consecutive = consecutive && figures[i] == figures[i - 1] + 1;
        if (consecutive)
            return "Figures " + std::to_string(figures.front()) + "–" + std::to_string(figures.back());
        std::string out = "Figures ";
        for (std::size_t i = 0; i < figures.size(); ++i)
            out += (i ? ", " : "") + std::to_string(figures[i]);
        return out;
    }

    std::string list_experiments()
    {
        std::ostringstream out;
        for (const auto &e : catalog())
        {
            out << to_string(e.id) << " → " << figure_label(e.figures) << '\n';
            out << "    " << e.summary << '\n';
            out << "    " << e.notes << '\n';
            std::istringstream echo(config_echo(ExperimentConfig::defaults(e.id)));
            out << "    defaults:";
            for (std::string line; std::getline(echo, line);)
                if (line.rfind("experiment=", 0) != 0)
                    out << ' ' << line;
            out << '\n';
        }
        return out.str();
    }

    std::string list_experiments_json()
    {
        auto doc = nlohmann::json::array();
        for (const auto &e : catalog())
        {
            const std::string id(to_string(e.id));
            nlohmann::json defaults = nlohmann::json::object();
            std::istringstream echo(config_echo(ExperimentConfig::defaults(e.id)));
            for (std::string line; std::getline(echo, line);)
            {
                const auto eq = line.find('=');
                defaults[line.substr(0, eq)] = line.substr(eq + 1);
            }
            nlohmann::json outputs;
            if (e.id == ExperimentId::csi_gain)
                outputs = {{id + ".csv", csi_gain_header}};
            else
                outputs = {{id + "_trials.csv", trials_header}, {id + "_stats.csv", stats_header}};
            doc.push_back({{"id", id},
                           {"figures", e.figures},
                           {"label", figure_label(e.figures)},
                           {"summary", e.summary},
                           {"notes", e.notes},
                           {"outputs", outputs},
                           {"defaults", defaults}});
        }
        return doc.dump(2) + '\n';
    }
}
