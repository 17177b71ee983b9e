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
#include <vector>

#include "swipt/phase_opt.hpp"
#include "swipt/ps_solver.hpp"

namespace swipt {

struct AoConfig {
    double convergence_threshold = 1e-5;  // fractional increase of harvested power
    int max_outer_iters = 30;
    bool single_pass = false;             // stop after the first phase update
    FpiConfig fpi;
    MultiplierConfig multiplier;
    PenaltyConfig penalty;
    SdpOptions sdp;
    int randomizations = 50;
    std::uint64_t seed = 0;               // randomisation stream
};

struct SolveReport {
    double harvested_power = 0.0;
    PsVector ps;
    CVec w;
    PhaseConfig phases;
    double sinr_achieved = 0.0;
    std::vector<double> iterate_trace;  // harvested power after init and after every outer iteration
    SolveStatus status = SolveStatus::MaxIters;
    int outer_iters = 0;
    int phase_steps_rejected = 0;
};

/// Phases that co-phase every cascaded term at the antenna with the strongest
/// cascaded amplitude sum.
PhaseConfig co_phasing_init(const ChannelSet& set);

/// Alternates the PS subproblem and the penalised phase subproblem. Each update
/// is kept only if it does not lower the harvested power and keeps the SINR
/// constraint, so the trace is non-decreasing.
SolveReport alternating_optimize(const ChannelSet& set, const SystemParams& params, const AoConfig& cfg,
                                 const PhaseConfig& init);
SolveReport alternating_optimize(const ChannelSet& set, const SystemParams& params, const AoConfig& cfg);

}  // namespace swipt
