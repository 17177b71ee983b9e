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

#include "swipt/geometry.hpp"
#include "swipt/rng.hpp"
#include "swipt/types.hpp"

namespace swipt {

enum class Regime { NearField, HybridField };

/// Deterministic AP-to-panel response under the projected-aperture
/// spherical-wave model.
struct NearFieldLink {
    RVec gains;   // linear power gain per element
    RVec phases;  // -2*pi*r/lambda per element
    CVec response;
};

/// Rayleigh statistics of one far-field hop: entries ~ CN(0, beta / d^alpha).
struct FarFieldStats {
    double path_loss_exponent = 1.6;
    double reference_gain = 0.01;
    double distance = 45.0;

    double variance() const { return reference_gain / std::pow(distance, path_loss_exponent); }
    void validate() const;
};

/// Per-element reflection phases of both panels, wrapped to [0, 2*pi).
struct PhaseConfig {
    RVec theta_a;
    RVec theta_b;

    static PhaseConfig zeros(Eigen::Index n_a, Eigen::Index n_b);
    /// Splits a stacked vector; only the arguments of the entries are used.
    static PhaseConfig from_stacked(const CVec& u, Eigen::Index n_a);

    Eigen::Index size() const { return theta_a.size() + theta_b.size(); }
    CVec stacked() const;  // [e^{j theta_a}; e^{j theta_b}]
};

double wrap_phase(double theta);

struct ChannelSet {
    CVec h_a;  // AP -> IRS1, N_a
    CVec h_b;  // AP -> IRS2, N_b
    CMat G_a;  // IRS1 -> user, M x N_a
    CMat G_b;  // IRS2 -> user, M x N_b
    CVec f;    // interferer -> user, M
    Regime regime = Regime::NearField;

    Eigen::Index antennas() const { return f.size(); }
    void check_dimensions() const;
};

NearFieldLink ap_irs_link(const IrsPanelSpec& panel, double wavelength);

/// M x N near-field panel-to-user matrix; exact distances in amplitude and phase.
CMat irs_user_link_near(const IrsPanelSpec& panel, const UserArraySpec& user, double wavelength);

/// g = G_a diag(e^{j theta_a}) h_a + G_b diag(e^{j theta_b}) h_b
CVec combined_channel(const ChannelSet& set, const PhaseConfig& phases);

CMat sample_far_field(const FarFieldStats& stats, Eigen::Index rows, Eigen::Index cols, Rng& rng);

ChannelSet build_near_field_channels(const SystemGeometry& geometry, double wavelength, CVec f);

ChannelSet build_hybrid_channels(const SystemGeometry& geometry, double wavelength, const FarFieldStats& stats_a,
                                 const FarFieldStats& stats_b, CVec f, Rng& rng_a, Rng& rng_b);

/// Rectangular element grid used by the gain analysis. Unlike IrsPanelSpec it
/// accepts even counts, with offsets n in {-(N-1)/2, ..., (N-1)/2} stepping by 1.
struct PanelGrid {
    int n_x = 11;
    int n_z = 11;
    double spacing = 0.2;
    double area = 0.04;
    double l_x = 1.0;
    double l_y = 1.0;

    static PanelGrid from_panel(const IrsPanelSpec& panel);
    double xi() const { return spacing / l_x; }
    double rbar() const { return std::abs(l_y) / l_x; }
    void validate() const;
};

/// Average combined AP-panel-user gain by exact double summation.
double hybrid_gain_numeric(const PanelGrid& grid, const FarFieldStats& stats);
double hybrid_gain_numeric(const IrsPanelSpec& panel, const FarFieldStats& stats);

}  // namespace swipt
