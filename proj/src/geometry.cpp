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

#include "swipt/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swipt {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void IrsPanelSpec::validate() const {
    require(n_x >= 1 && n_z >= 1, "panel element counts must be positive");
    require(n_x % 2 == 1 && n_z % 2 == 1, "panel element counts must be odd");
    require(spacing > 0.0, "element spacing must be positive");
    require(area > 0.0 && std::sqrt(area) <= spacing * (1.0 + 1e-12),
            "element area must satisfy 0 < sqrt(A) <= spacing");
    require(center.y != 0.0, "panel centre must have nonzero l_y");
    require(center.z == 0.0, "panel centre must lie at z = 0");
    require(normal_sign == 1 || normal_sign == -1, "normal_sign must be +1 or -1");
    require(normal_sign == (center.y > 0.0 ? -1 : 1), "panel must face the AP at the origin");
}

IrsPanelSpec make_panel(Vec3 center, int n_x, int n_z, double spacing, double area) {
    IrsPanelSpec p;
    p.center = center;
    p.n_x = n_x;
    p.n_z = n_z;
    p.spacing = spacing;
    p.area = area;
    p.normal_sign = center.y > 0.0 ? -1 : 1;
    p.validate();
    return p;
}

void UserArraySpec::validate() const {
    require(antenna_count >= 1, "antenna count must be positive");
    require(antenna_spacing > 0.0, "antenna spacing must be positive");
}

UserArraySpec user_array_centered_at(Vec3 centroid, int antenna_count, double antenna_spacing) {
    UserArraySpec u;
    u.antenna_count = antenna_count;
    u.antenna_spacing = antenna_spacing;
    u.start = {centroid.x, centroid.y - 0.5 * (antenna_count + 1) * antenna_spacing, centroid.z};
    u.validate();
    return u;
}

void SystemGeometry::validate() const {
    require(ap_position == Vec3{}, "AP must sit at the origin");
    irs1.validate();
    irs2.validate();
    user.validate();
    for (const auto* panel : {&irs1, &irs2}) {
        for (const auto& p : element_positions(*panel)) {
            for (const auto& u : user_antenna_positions(user)) {
                require(norm(p - u) > 0.0, "user antenna coincides with a panel element");
            }
        }
    }
}

std::vector<ElementIndex> element_indices(const IrsPanelSpec& panel) {
    std::vector<ElementIndex> out;
    out.reserve(static_cast<size_t>(panel.element_count()));
    const int hx = (panel.n_x - 1) / 2;
    const int hz = (panel.n_z - 1) / 2;
    for (int nx = -hx; nx <= hx; ++nx) {
        for (int nz = -hz; nz <= hz; ++nz) out.push_back({nx, nz});
    }
    return out;
}

std::vector<Vec3> element_positions(const IrsPanelSpec& panel) {
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(panel.element_count()));
    for (const auto& idx : element_indices(panel)) {
        out.push_back({panel.center.x + idx.n_x * panel.spacing, panel.center.y, idx.n_z * panel.spacing});
    }
    return out;
}

DistanceTable ap_element_distances(const IrsPanelSpec& panel) {
    const auto idx = element_indices(panel);
    DistanceTable table;
    table.meters.resize(static_cast<Eigen::Index>(idx.size()));
    const double lx = panel.center.x;
    if (lx == 0.0) {
        table.euclidean_fallback = true;
        const auto pos = element_positions(panel);
        for (size_t k = 0; k < pos.size(); ++k) table.meters(static_cast<Eigen::Index>(k)) = norm(pos[k]);
        return table;
    }
    const double rbar = panel.center.y / lx;
    const double xi = panel.spacing / lx;
    for (size_t k = 0; k < idx.size(); ++k) {
        const double nx = idx[k].n_x;
        const double nz = idx[k].n_z;
        const double s = 1.0 + rbar * rbar + 2.0 * nx * xi + (nx * nx + nz * nz) * xi * xi;
        table.meters(static_cast<Eigen::Index>(k)) = std::abs(lx) * std::sqrt(s);
    }
    return table;
}

std::vector<Vec3> user_antenna_positions(const UserArraySpec& user) {
    std::vector<Vec3> out;
    out.reserve(static_cast<size_t>(user.antenna_count));
    for (int m = 1; m <= user.antenna_count; ++m) {
        out.push_back({user.start.x, user.start.y + m * user.antenna_spacing, user.start.z});
    }
    return out;
}

double rayleigh_distance(const IrsPanelSpec& panel, double wavelength) {
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
    const double dx = (panel.n_x - 1) * panel.spacing;
    const double dz = (panel.n_z - 1) * panel.spacing;
    return 2.0 * (dx * dx + dz * dz) / wavelength;
}

}  // namespace swipt
