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

#include <optional>

#include "swipt/channel.hpp"
#include "swipt/ps_solver.hpp"
#include "swipt/receiver.hpp"

namespace swipt {

struct ClosedFormGain {
    double value = 0.0;
    bool in_validity_regime = true;  // false when xi > 0.1
};

/// Arctan closed form of the AP-panel-user gain (continuum approximation of
/// the double sum). Throws when rbar == 0.
ClosedFormGain closed_form_gain(const PanelGrid& grid, const FarFieldStats& stats);
ClosedFormGain closed_form_gain(const IrsPanelSpec& panel, const FarFieldStats& stats);

enum class AsymptoticCondition {
    A,  // N_x large
    B,  // N_z large, N_x < 2 sqrt(1 + rbar^2) / xi
    C,  // N_z large, N_x > 2 sqrt(1 + rbar^2) / xi
};

const char* to_string(AsymptoticCondition c);

/// 2 sqrt(1 + rbar^2) / xi: the N_x separating conditions b and c.
double branch_boundary(const PanelGrid& grid);

/// Limit of the closed form as the relevant dimension grows. Conditions b and
/// c are rejected on the wrong side of the boundary or within 1% of it.
double asymptotic_gain(const PanelGrid& grid, const FarFieldStats& stats, AsymptoticCondition condition);
double asymptotic_gain(const IrsPanelSpec& panel, const FarFieldStats& stats, AsymptoticCondition condition);

/// beta A / (2 eps^2 d^alpha): the gain of an infinite panel.
double mirror_bound(const FarFieldStats& stats, double spacing, double area);

struct GainBreakdown {
    double exact_sum = 0.0;
    double closed_form = 0.0;
    bool closed_form_valid = true;
    std::optional<double> asymptotic;
    std::optional<AsymptoticCondition> condition;
    double mirror_bound = 0.0;
};

GainBreakdown gain_breakdown(const PanelGrid& grid, const FarFieldStats& stats,
                             std::optional<AsymptoticCondition> condition = std::nullopt);

struct HybridPsSolution {
    PsVector ps;
    double harvested_power = 0.0;
    double sinr = 0.0;
    SolveStatus status = SolveStatus::Converged;
};

/// Exact solution of the hybrid PS linear program by fractional knapsack.
HybridPsSolution solve_hybrid_ps(double gain_a, double gain_b, const CVec& f, const SystemParams& params);

/// Common ratio making the averaged SINR equal gamma_0.
HybridPsSolution solve_hybrid_equal_ps(double gain_a, double gain_b, const CVec& f, const SystemParams& params);

}  // namespace swipt
