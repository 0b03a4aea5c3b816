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

#ifndef TXCSI_CLI_CONFIG_HPP
#define TXCSI_CLI_CONFIG_HPP

#include "txcsi/montecarlo.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace txcsi::cli
{
    using Setting = std::pair<std::string, std::string>;

    // Flat key=value configuration. Lists are `a,b,c`; ranges are `lo..hi[:step]`. Blank lines
    // and text after `#` are ignored.
    //
    //   experiment    const-equal | const-two-class | spatial-equal | spatial-two-class | csi-gain
    //   paper_scale   true | false (selects the catalog defaults; applied before other keys)
    //   N, M          integer lists
    //   K             N | integer
    //   n             fixed interferer counts       n_ratio   interferers per antenna
    //   trials, seed, threads
    //   noise, gamma, gamma_db, gamma1, gamma1_db, p1, p2, q
    //   density, alpha, gain, A, normalized, precoded, lower_bound
    //
    // Keys may repeat; the last occurrence wins.
    const std::vector<std::string> &config_keys();

    // Parses config text into ordered settings. Throws parse_error with the 1-based line.
    std::vector<Setting> parse_settings(std::string_view text);

    // Resolves settings over the catalog defaults of the selected experiment. `overrides` are
    // applied after `settings`. Throws parse_error for unknown keys and validation_error naming
    // the field for bad values.
    ExperimentConfig resolve_config(const std::vector<Setting> &settings, const std::vector<Setting> &overrides = {});

    ExperimentConfig parse_config(std::string_view text, const std::vector<Setting> &overrides = {});
    ExperimentConfig parse_config_file(const std::filesystem::path &path, const std::vector<Setting> &overrides = {});

    // key=value text that parse_config maps back to the same configuration.
    std::string config_echo(const ExperimentConfig &config);

    bool configs_equal(const ExperimentConfig &a, const ExperimentConfig &b);

    // %.17g
    std::string format_double(double v);

    std::string valid_experiment_ids();
}

#endif
