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

#include "swipt/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

void FarFieldStats::validate() const {
    if (!(path_loss_exponent > 0.0 && reference_gain > 0.0 && distance > 0.0)) {
        throw std::invalid_argument("far-field statistics must be positive");
    }
}

double wrap_phase(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

PhaseConfig PhaseConfig::zeros(Eigen::Index n_a, Eigen::Index n_b) {
    return {RVec::Zero(n_a), RVec::Zero(n_b)};
}

PhaseConfig PhaseConfig::from_stacked(const CVec& u, Eigen::Index n_a) {
    PhaseConfig p;
    p.theta_a.resize(n_a);
    p.theta_b.resize(u.size() - n_a);
    for (Eigen::Index k = 0; k < u.size(); ++k) {
        const double t = std::abs(u(k)) < 1e-300 ? 0.0 : wrap_phase(std::arg(u(k)));
        if (k < n_a) {
            p.theta_a(k) = t;
        } else {
            p.theta_b(k - n_a) = t;
        }
    }
    return p;
}

CVec PhaseConfig::stacked() const {
    CVec u(size());
    for (Eigen::Index k = 0; k < theta_a.size(); ++k) u(k) = std::polar(1.0, theta_a(k));
    for (Eigen::Index k = 0; k < theta_b.size(); ++k) u(theta_a.size() + k) = std::polar(1.0, theta_b(k));
    return u;
}

void ChannelSet::check_dimensions() const {
    const auto m = f.size();
    if (G_a.rows() != m || G_b.rows() != m || G_a.cols() != h_a.size() || G_b.cols() != h_b.size()) {
        throw std::invalid_argument("channel set dimensions are inconsistent");
    }
}

NearFieldLink ap_irs_link(const IrsPanelSpec& panel, double wavelength) {
    panel.validate();
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
    const auto dist = ap_element_distances(panel);
    const auto n = dist.meters.size();
    NearFieldLink link;
    link.gains.resize(n);
    link.phases.resize(n);
    link.response.resize(n);
    // Projected aperture: (p_A - p) . normal / r = -normal_sign * l_y / r = |l_y| / r.
    const double proj = -panel.normal_sign * panel.center.y;
    for (Eigen::Index k = 0; k < n; ++k) {
        const double r = dist.meters(k);
        const double gain = panel.area * proj / (4.0 * kPi * r * r * r);
        if (!(gain > 0.0)) throw std::invalid_argument("non-positive AP-panel gain");
        link.gains(k) = gain;
        link.phases(k) = -kTwoPi * r / wavelength;
        link.response(k) = std::polar(std::sqrt(gain), link.phases(k));
    }
    return link;
}

CMat irs_user_link_near(const IrsPanelSpec& panel, const UserArraySpec& user, double wavelength) {
    panel.validate();
    user.validate();
    const auto elems = element_positions(panel);
    const auto ants = user_antenna_positions(user);
    CMat G(static_cast<Eigen::Index>(ants.size()), static_cast<Eigen::Index>(elems.size()));
    for (size_t m = 0; m < ants.size(); ++m) {
        const double proj = panel.normal_sign * (ants[m].y - panel.center.y);
        if (!(proj > 0.0)) throw std::invalid_argument("user antenna lies behind the panel plane");
        for (size_t k = 0; k < elems.size(); ++k) {
            const double r = norm(elems[k] - ants[m]);
            if (!(r > 0.0)) throw std::invalid_argument("user antenna coincides with a panel element");
            const double gain = panel.area * proj / (4.0 * kPi * r * r * r);
            G(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(k)) =
                std::polar(std::sqrt(gain), -kTwoPi * r / wavelength);
        }
    }
    return G;
}

CVec combined_channel(const ChannelSet& set, const PhaseConfig& phases) {
    if (phases.theta_a.size() != set.h_a.size() || phases.theta_b.size() != set.h_b.size()) {
        throw std::invalid_argument("phase configuration does not match panel sizes");
    }
    const CVec u = phases.stacked();
    const auto na = set.h_a.size();
    const auto nb = set.h_b.size();
    CVec g = set.G_a * u.head(na).cwiseProduct(set.h_a);
    g.noalias() += set.G_b * u.tail(nb).cwiseProduct(set.h_b);
    return g;
}

CMat sample_far_field(const FarFieldStats& stats, Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    stats.validate();
    const double var = stats.variance();
    CMat out(rows, cols);
    // Column-major fill order is part of the determinism contract.
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) out(r, c) = rng.complex_gaussian(var);
    }
    return out;
}

ChannelSet build_near_field_channels(const SystemGeometry& geometry, double wavelength, CVec f) {
    geometry.validate();
    ChannelSet set;
    set.regime = Regime::NearField;
    set.h_a = ap_irs_link(geometry.irs1, wavelength).response;
    set.h_b = ap_irs_link(geometry.irs2, wavelength).response;
    set.G_a = irs_user_link_near(geometry.irs1, geometry.user, wavelength);
    set.G_b = irs_user_link_near(geometry.irs2, geometry.user, wavelength);
    set.f = std::move(f);
    set.check_dimensions();
    return set;
}

ChannelSet build_hybrid_channels(const SystemGeometry& geometry, double wavelength, const FarFieldStats& stats_a,
                                 const FarFieldStats& stats_b, CVec f, Rng& rng_a, Rng& rng_b) {
    geometry.validate();
    ChannelSet set;
    set.regime = Regime::HybridField;
    set.h_a = ap_irs_link(geometry.irs1, wavelength).response;
    set.h_b = ap_irs_link(geometry.irs2, wavelength).response;
    const auto m = static_cast<Eigen::Index>(geometry.user.antenna_count);
    set.G_a = sample_far_field(stats_a, m, set.h_a.size(), rng_a);
    set.G_b = sample_far_field(stats_b, m, set.h_b.size(), rng_b);
    set.f = std::move(f);
    set.check_dimensions();
    return set;
}

PanelGrid PanelGrid::from_panel(const IrsPanelSpec& panel) {
    return {panel.n_x, panel.n_z, panel.spacing, panel.area, panel.center.x, panel.center.y};
}

void PanelGrid::validate() const {
    if (n_x < 1 || n_z < 1) throw std::invalid_argument("grid counts must be positive");
    if (!(spacing > 0.0 && area > 0.0)) throw std::invalid_argument("grid spacing and area must be positive");
    if (!(l_x > 0.0)) throw std::invalid_argument("grid requires l_x > 0");
    if (l_y == 0.0) throw std::invalid_argument("grid requires l_y != 0");
}

double hybrid_gain_numeric(const PanelGrid& grid, const FarFieldStats& stats) {
    grid.validate();
    stats.validate();
    const double xi = grid.xi();
    const double rbar = grid.rbar();
    const double ox = 0.5 * (grid.n_x - 1);
    const double oz = 0.5 * (grid.n_z - 1);
    double sum = 0.0;
    for (int i = 0; i < grid.n_x; ++i) {
        const double nx = i - ox;
        const double base = 1.0 + rbar * rbar + 2.0 * nx * xi + nx * nx * xi * xi;
        double row = 0.0;
        for (int j = 0; j < grid.n_z; ++j) {
            const double nz = j - oz;
            const double s = base + nz * nz * xi * xi;
            row += 1.0 / (s * std::sqrt(s));
        }
        sum += row;
    }
    const double lx3 = grid.l_x * grid.l_x * grid.l_x;
    return stats.variance() * grid.area * std::abs(grid.l_y) / (4.0 * kPi * lx3) * sum;
}

double hybrid_gain_numeric(const IrsPanelSpec& panel, const FarFieldStats& stats) {
    panel.validate();
    return hybrid_gain_numeric(PanelGrid::from_panel(panel), stats);
}

}  // namespace swipt
