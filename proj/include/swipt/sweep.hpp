// SPDX-License-Identifier: Apache-2.0
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "swipt/schemes.hpp"

namespace swipt {

struct SweepOptions {
    int jobs = 1;
    bool timing = false;  // wall_ms is written as 0 unless set, keeping output reproducible
};

/// Every (sweep value, trial) cell runs all selected schemes on one shared
/// realisation. Rows come back ordered by (cell, trial, scheme order) whatever
/// the job count.
std::vector<ResultRow> run_sweep(const Scenario& scenario, const SweepOptions& options = {});

struct CellSummary {
    SchemeId scheme = SchemeId::Proposed;
    SweepVariable sweep_variable = SweepVariable::None;
    double sweep_value = 0.0;
    int trials = 0;
    int infeasible = 0;
    double mean_harvested_power_w = 0.0;  // over feasible rows; NaN when none
    double std_harvested_power_w = 0.0;
    bool flagged = false;                 // more than half of the trials infeasible
};

std::vector<CellSummary> summarize(const std::vector<ResultRow>& rows);

/// Decimal with 12 significant digits.
std::string format_float(double v);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_summary(std::ostream& out, const std::vector<CellSummary>& cells);

}  // namespace swipt
