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

namespace swipt {

struct SystemParams {
    double transmit_power = 1.0;       // P_t, W
    double interference_power = 1.0;   // P_in, W
    double antenna_noise = 1.5848931924611143e-06;  // sigma_r^2, W (-28 dBm)
    double id_noise = 1.5848931924611143e-06;       // delta^2, W (-28 dBm)
    double harvest_efficiency = 0.9;   // eta
    double sinr_threshold = 10.0;      // gamma_0, linear

    void validate() const;
};

/// Per-antenna power-splitting ratios; rho_m goes to the information decoder.
struct PsVector {
    RVec rho;

    static PsVector uniform(Eigen::Index antennas, double value);
    Eigen::Index size() const { return rho.size(); }
    RVec sqrt_rho() const { return rho.cwiseSqrt(); }
    /// Throws unless every entry is in [0, 1].
    void validate() const;
};

/// Applies S^{-1} with S = P_in L^{1/2} f f^H L^{1/2} + sigma_r^2 L + delta^2 I,
/// using the diagonal-plus-rank-one structure.
CVec apply_s_inverse(const CVec& x, const CVec& f, const PsVector& ps, const SystemParams& params);

/// Dense S, for cross-checks.
CMat covariance_s(const CVec& f, const PsVector& ps, const SystemParams& params);

/// w = S^{-1} L^{1/2} g
CVec mmse_beamformer(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params);

/// SINR of an arbitrary receive beamformer. Throws on w == 0.
double sinr(const CVec& w, const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params);

/// SINR under MMSE combining: P_t g^H L^{1/2} S^{-1} L^{1/2} g. Finite on the
/// whole box, including rho_m = 0.
double mmse_sinr(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params);

/// d SINR_mmse / d rho_m = delta^2 P_t |v_m|^2 with v = (B L + delta^2 I)^{-1} g,
/// B = P_in f f^H + sigma_r^2 I.
RVec mmse_sinr_gradient(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params);

/// Per-antenna power at the splitter input: P_t|g_m|^2 + P_in|f_m|^2 + sigma_r^2.
RVec received_power(const CVec& g, const CVec& f, const SystemParams& params);

double harvested_power_near(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params);

/// Ratio-of-expectations SINR for the hybrid regime.
double hybrid_average_sinr(double gain_a, double gain_b, const CVec& f, const PsVector& ps,
                           const SystemParams& params);

double harvested_power_hybrid(double gain_a, double gain_b, const CVec& f, const PsVector& ps,
                              const SystemParams& params);

}  // namespace swipt
