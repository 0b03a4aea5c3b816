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

#ifndef TXCSI_CLI_RUN_HPP
#define TXCSI_CLI_RUN_HPP

#include "txcsi/montecarlo.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace txcsi::cli
{
    inline constexpr const char *trials_header = "experiment,N,K,M,n,trial,seed,cap_exact,cap_upper,cap_lower,normalized";
    inline constexpr const char *stats_header = "experiment,N,K,M,n,trials,mean,std,asymptote,rel_dev_mean,rel_dev_max";
    inline constexpr const char *csi_gain_header = "A,N,K,M,alpha,cap_csi,cap_nocsi,ratio";

    // Environment variable naming the default output directory.
    inline constexpr const char *out_dir_env = "TXCSI_OUT_DIR";

    void write_trials_csv(std::ostream &out, const std::vector<TrialRecord> &trials);
    void write_stats_csv(std::ostream &out, const std::vector<AggregateStats> &stats);
    void write_csi_gain_csv(std::ostream &out, const std::vector<CsiGainRow> &rows);

    struct RunOutputs
    {
        std::vector<std::filesystem::path> csv_files;
        std::filesystem::path manifest;
    };

    // Runs the experiment and writes <id>_trials.csv, <id>_stats.csv (or <id>.csv for
    // csi-gain) and <id>_manifest.json into `out_dir`. Throws io_error if the directory
    // cannot be created or written.
    RunOutputs run_and_write(const ExperimentConfig &config, const std::filesystem::path &out_dir);

    // `--out`, then $TXCSI_OUT_DIR, then ./txcsi-out.
    std::filesystem::path default_out_dir();

    std::string version();

    // Entry point of the txcsi executable.
    int main(int argc, char **argv);
}

#endif
