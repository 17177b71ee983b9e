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

#include "swipt/hybridfield.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swipt {

namespace {

double prefactor(const PanelGrid& grid, const FarFieldStats& stats) {
    return stats.reference_gain * grid.area /
           (2.0 * kPi * grid.spacing * grid.spacing * std::pow(stats.distance, stats.path_loss_exponent));
}

}  // namespace

ClosedFormGain closed_form_gain(const PanelGrid& grid, const FarFieldStats& stats) {
    grid.validate();
    stats.validate();
    const double xi = grid.xi();
    const double rb = grid.rbar();
    if (rb == 0.0) throw std::invalid_argument("closed form undefined for rbar = 0");
    const double nx = grid.n_x;
    const double nz = grid.n_z;
    const double common = nx * nx * xi * xi / 4.0 + nz * nz * xi * xi / 4.0 + rb * rb + 1.0;
    const double upper = std::atan(xi * nz * (1.0 + xi * nx / 2.0) / (2.0 * rb * std::sqrt(common + nx * xi)));
    const double lower = std::atan(xi * nz * (1.0 - xi * nx / 2.0) / (2.0 * rb * std::sqrt(common - nx * xi)));
    return {prefactor(grid, stats) * (upper - lower), xi <= 0.1};
}

ClosedFormGain closed_form_gain(const IrsPanelSpec& panel, const FarFieldStats& stats) {
    panel.validate();
    return closed_form_gain(PanelGrid::from_panel(panel), stats);
}

const char* to_string(AsymptoticCondition c) {
    switch (c) {
        case AsymptoticCondition::A: return "a";
        case AsymptoticCondition::B: return "b";
        case AsymptoticCondition::C: return "c";
    }
    return "?";
}

double branch_boundary(const PanelGrid& grid) {
    const double rb = grid.rbar();
    return 2.0 * std::sqrt(1.0 + rb * rb) / grid.xi();
}

double asymptotic_gain(const PanelGrid& grid, const FarFieldStats& stats, AsymptoticCondition condition) {
    grid.validate();
    stats.validate();
    const double xi = grid.xi();
    const double rb = grid.rbar();
    if (rb == 0.0) throw std::invalid_argument("asymptotic gain undefined for rbar = 0");
    const double pre = prefactor(grid, stats);
    if (condition == AsymptoticCondition::A) {
        return 2.0 * pre * std::atan(xi * grid.n_z / (2.0 * rb));
    }
    const double nx = grid.n_x;
    const double boundary = branch_boundary(grid);
    if (std::abs(nx - boundary) <= 0.01 * boundary) {
        throw std::invalid_argument("N_x within 1% of the branch boundary");
    }
    if (condition == AsymptoticCondition::B && nx > boundary) {
        throw std::invalid_argument("condition b requires N_x below the branch boundary");
    }
    if (condition == AsymptoticCondition::C && nx < boundary) {
        throw std::invalid_argument("condition c requires N_x above the branch boundary");
    }
    const double arg = 4.0 * xi * rb * nx / (4.0 * rb * rb + 4.0 - xi * xi * nx * nx);
    const double shift = condition == AsymptoticCondition::C ? kPi : 0.0;
    return pre * (std::atan(arg) + shift);
}

double asymptotic_gain(const IrsPanelSpec& panel, const FarFieldStats& stats, AsymptoticCondition condition) {
    panel.validate();
    return asymptotic_gain(PanelGrid::from_panel(panel), stats, condition);
}

double mirror_bound(const FarFieldStats& stats, double spacing, double area) {
    return stats.reference_gain * area /
           (2.0 * spacing * spacing * std::pow(stats.distance, stats.path_loss_exponent));
}

GainBreakdown gain_breakdown(const PanelGrid& grid, const FarFieldStats& stats,
                             std::optional<AsymptoticCondition> condition) {
    GainBreakdown out;
    out.exact_sum = hybrid_gain_numeric(grid, stats);
    const ClosedFormGain cf = closed_form_gain(grid, stats);
    out.closed_form = cf.value;
    out.closed_form_valid = cf.in_validity_regime;
    out.mirror_bound = mirror_bound(stats, grid.spacing, grid.area);
    if (condition) {
        out.condition = condition;
        out.asymptotic = asymptotic_gain(grid, stats, *condition);
    }
    return out;
}

namespace {

struct HybridCoefficients {
    RVec c;
    RVec a;
    double b = 0.0;
};

HybridCoefficients hybrid_coefficients(double gain_a, double gain_b, const CVec& f, const SystemParams& params) {
    params.validate();
    if (f.size() == 0) throw std::invalid_argument("empty interference vector");
    if (!(gain_a >= 0.0 && gain_b >= 0.0)) throw std::invalid_argument("gains must be non-negative");
    const double signal = params.transmit_power * (gain_a + gain_b);
    const RVec fi = params.interference_power * f.cwiseAbs2();
    HybridCoefficients k;
    k.c = (params.harvest_efficiency * (fi.array() + signal + params.antenna_noise)).matrix();
    k.a = (signal - params.sinr_threshold * (fi.array() + params.antenna_noise)).matrix();
    k.b = params.sinr_threshold * params.id_noise;
    return k;
}

HybridPsSolution finish(PsVector ps, double gain_a, double gain_b, const CVec& f, const SystemParams& params,
                        SolveStatus status) {
    HybridPsSolution out;
    out.ps = std::move(ps);
    out.status = status;
    if (status != SolveStatus::Infeasible) {
        out.harvested_power = harvested_power_hybrid(gain_a, gain_b, f, out.ps, params);
        out.sinr = hybrid_average_sinr(gain_a, gain_b, f, out.ps, params);
    }
    return out;
}

}  // namespace

HybridPsSolution solve_hybrid_ps(double gain_a, double gain_b, const CVec& f, const SystemParams& params) {
    const HybridCoefficients k = hybrid_coefficients(gain_a, gain_b, f, params);
    const auto m = f.size();
    PsVector ps = PsVector::uniform(m, 0.0);
    if (k.a.cwiseMax(0.0).sum() < k.b) return finish(ps, gain_a, gain_b, f, params, SolveStatus::Infeasible);

    std::vector<Eigen::Index> order;
    for (Eigen::Index i = 0; i < m; ++i) {
        if (k.a(i) > 0.0) order.push_back(i);
    }
    // Cheapest harvested power lost per unit of constraint first; ties by index.
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return k.c(x) * k.a(y) < k.c(y) * k.a(x); });
    double need = k.b;
    for (const Eigen::Index i : order) {
        if (need <= 0.0) break;
        if (k.a(i) >= need) {
            ps.rho(i) = need / k.a(i);
            need = 0.0;
        } else {
            ps.rho(i) = 1.0;
            need -= k.a(i);
        }
    }
    return finish(ps, gain_a, gain_b, f, params, SolveStatus::Converged);
}

HybridPsSolution solve_hybrid_equal_ps(double gain_a, double gain_b, const CVec& f, const SystemParams& params) {
    const HybridCoefficients k = hybrid_coefficients(gain_a, gain_b, f, params);
    const double total = k.a.sum();
    if (!(total > 0.0) || k.b > total) {
        return finish(PsVector::uniform(f.size(), 0.0), gain_a, gain_b, f, params, SolveStatus::Infeasible);
    }
    // The constraint is linear in a common ratio, so the tight point is explicit.
    return finish(PsVector::uniform(f.size(), k.b / total), gain_a, gain_b, f, params, SolveStatus::Converged);
}

}  // namespace swipt
