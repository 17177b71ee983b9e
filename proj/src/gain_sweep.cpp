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

#include "swipt/gain_sweep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "swipt/sweep.hpp"

namespace swipt {

double free_space_gain(const PanelGrid& grid, const FarFieldStats& stats) {
    grid.validate();
    stats.validate();
    const double xi = grid.xi();
    const double rbar = grid.rbar();
    const double ox = 0.5 * (grid.n_x - 1);
    const double oz = 0.5 * (grid.n_z - 1);
    double sum = 0.0;
    for (int i = 0; i < grid.n_x; ++i) {
        const double nx = i - ox;
        for (int j = 0; j < grid.n_z; ++j) {
            const double nz = j - oz;
            sum += 1.0 / (1.0 + rbar * rbar + 2.0 * nx * xi + (nx * nx + nz * nz) * xi * xi);
        }
    }
    return stats.variance() * grid.area / (4.0 * kPi * grid.l_x * grid.l_x) * sum;
}

std::vector<GainSweepRow> gain_sweep(const PanelGrid& grid, const FarFieldStats& stats, GainAxis axis,
                                     const std::vector<int>& values) {
    std::vector<GainSweepRow> rows;
    rows.reserve(values.size());
    for (const int n : values) {
        if (n < 1) throw std::invalid_argument("element counts must be positive");
        PanelGrid g = grid;
        (axis == GainAxis::X ? g.n_x : g.n_z) = n;
        std::optional<AsymptoticCondition> cond = AsymptoticCondition::A;
        if (axis == GainAxis::Z) {
            const double boundary = branch_boundary(g);
            if (std::abs(g.n_x - boundary) <= 0.01 * boundary) {
                cond.reset();
            } else {
                cond = g.n_x < boundary ? AsymptoticCondition::B : AsymptoticCondition::C;
            }
        }
        GainSweepRow row;
        row.n_x = g.n_x;
        row.n_z = g.n_z;
        row.gains = gain_breakdown(g, stats, cond);
        row.free_space = free_space_gain(g, stats);
        rows.push_back(row);
    }
    return rows;
}

void write_gain_csv(std::ostream& out, GainAxis axis, const std::vector<GainSweepRow>& rows) {
    out << "axis,n_x,n_z,exact_sum,closed_form,closed_form_valid,asymptotic,condition,free_space,mirror_bound\n";
    for (const GainSweepRow& r : rows) {
        out << (axis == GainAxis::X ? 'x' : 'z') << ',' << r.n_x << ',' << r.n_z << ','
            << format_float(r.gains.exact_sum) << ',' << format_float(r.gains.closed_form) << ','
            << (r.gains.closed_form_valid ? 1 : 0) << ','
            << (r.gains.asymptotic ? format_float(*r.gains.asymptotic) : std::string("nan")) << ','
            << (r.gains.condition ? to_string(*r.gains.condition) : "none") << ',' << format_float(r.free_space)
            << ',' << format_float(r.gains.mirror_bound) << '\n';
    }
}

}  // namespace swipt
