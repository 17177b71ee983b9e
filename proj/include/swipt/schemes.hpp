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

#include <cstdint>
#include <optional>

#include "swipt/scenario.hpp"

namespace swipt {

/// One channel draw shared by every scheme in a (sweep cell, trial).
struct TrialRealization {
    ChannelSet channels;       // near field: full set; hybrid: only f is populated
    double gain_a = 0.0;       // hybrid average gains
    double gain_b = 0.0;
    double gain_single = 0.0;  // single panel with doubled N_x at the IRS1 centre
    Vec3 user_centroid;
    std::uint64_t trial = 0;
    std::uint64_t cell = 0;
};

TrialRealization realize_trial(const Scenario& scenario, std::uint64_t trial, std::uint64_t cell);

struct ResultRow {
    SchemeId scheme = SchemeId::Proposed;
    SweepVariable sweep_variable = SweepVariable::None;
    double sweep_value = 0.0;
    std::uint64_t trial = 0;
    double harvested_power_w = 0.0;
    double sinr_linear = 0.0;
    SolveStatus status = SolveStatus::Infeasible;
    double wall_ms = 0.0;
};

/// Holds the Proposed solution of a trial; EqualPS and RandomPS reuse its phases.
struct TrialCache {
    std::optional<SolveReport> proposed;
};

/// Runs one scheme. `scenario` must already be specialised to the sweep cell.
ResultRow run_scheme(SchemeId scheme, const TrialRealization& realized, const Scenario& scenario, TrialCache& cache);
ResultRow run_scheme(SchemeId scheme, const TrialRealization& realized, const Scenario& scenario);

}  // namespace swipt
