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
#include <optional>
#include <vector>

#include "swipt/hybridfield.hpp"

namespace swipt {

enum class GainAxis { X, Z };

struct GainSweepRow {
    int n_x = 0;
    int n_z = 0;
    GainBreakdown gains;
    double free_space = 0.0;  // same sum without the projected-aperture factor
};

/// Gain of the comparison model that drops the projected aperture:
/// per-element A / (4 pi l_x^2 s) instead of A |l_y| / (4 pi l_x^3 s^{3/2}).
double free_space_gain(const PanelGrid& grid, const FarFieldStats& stats);

/// Varies N along `axis` over `values` with the other dimension taken from
/// `grid`. The asymptote is condition a for the x axis and b or c (by the
/// branch boundary) for the z axis; it is omitted inside the 1% exclusion band.
std::vector<GainSweepRow> gain_sweep(const PanelGrid& grid, const FarFieldStats& stats, GainAxis axis,
                                     const std::vector<int>& values);

void write_gain_csv(std::ostream& out, GainAxis axis, const std::vector<GainSweepRow>& rows);

}  // namespace swipt
