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

#ifndef TXCSI_CLI_CATALOG_HPP
#define TXCSI_CLI_CATALOG_HPP

#include "txcsi/montecarlo.hpp"

#include <string>
#include <vector>

namespace txcsi::cli
{
    struct CatalogEntry
    {
        ExperimentId id;
        std::vector<int> figures;
        std::string summary;
        std::string notes;
    };

    const std::vector<CatalogEntry> &catalog();

    // "Figures 2–3", "Figures 5, 6, 8, 10"
    std::string figure_label(const std::vector<int> &figures);

    // Human-readable listing: one block per experiment with its figure mapping and defaults.
    std::string list_experiments();

    // JSON array of {id, figures, summary, notes, outputs, defaults}.
    std::string list_experiments_json();
}

#endif
