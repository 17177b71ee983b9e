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

#include "swipt/types.hpp"

#include <vector>

namespace swipt {

/// Uniform planar reflecting array parallel to the x-z plane.
///
/// Element (n_x, n_z) sits at (l_x + n_x*spacing, l_y, n_z*spacing) with
/// n in {0, +-1, ..., +-(N-1)/2}. Counts must be odd. normal_sign is the y
/// component of the unit normal on the reflecting side; a panel must face
/// the AP at the origin, so normal_sign == -sign(l_y).
struct IrsPanelSpec {
    Vec3 center{1.0, 1.0, 0.0};
    int n_x = 11;
    int n_z = 11;
    double spacing = 0.2;
    double area = 0.04;
    int normal_sign = -1;

    int element_count() const { return n_x * n_z; }

    /// Throws std::invalid_argument when any panel invariant is violated.
    void validate() const;
};

/// Builds a panel facing the origin with the given centre (z must be 0).
IrsPanelSpec make_panel(Vec3 center, int n_x, int n_z, double spacing, double area);

/// Uniform linear array along y; antenna m (1-based) at start + (0, m*d, 0).
struct UserArraySpec {
    Vec3 start{8.0, 0.0, -2.0};
    int antenna_count = 5;
    double antenna_spacing = 0.2;

    void validate() const;
};

/// Array whose antenna centroid is at `centroid`.
UserArraySpec user_array_centered_at(Vec3 centroid, int antenna_count, double antenna_spacing);

struct SystemGeometry {
    Vec3 ap_position{};
    IrsPanelSpec irs1;
    IrsPanelSpec irs2;
    UserArraySpec user;

    void validate() const;
};

struct ElementIndex {
    int n_x = 0;
    int n_z = 0;
};

/// Row-major (n_x outer, n_z inner); the same order indexes h, diag(Theta)
/// and the columns of G everywhere.
std::vector<ElementIndex> element_indices(const IrsPanelSpec& panel);

std::vector<Vec3> element_positions(const IrsPanelSpec& panel);

struct DistanceTable {
    RVec meters;
    // Set when l_x == 0 and the normalised parameterisation is undefined.
    bool euclidean_fallback = false;
};

/// AP-to-element distances via l_x*sqrt(1 + rbar^2 + 2 n_x xi + (n_x^2+n_z^2) xi^2).
DistanceTable ap_element_distances(const IrsPanelSpec& panel);

std::vector<Vec3> user_antenna_positions(const UserArraySpec& user);

/// 2 D^2 / lambda with D the panel diagonal aperture.
double rayleigh_distance(const IrsPanelSpec& panel, double wavelength);

}  // namespace swipt
