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

#include "swipt/channel.hpp"
#include "swipt/receiver.hpp"
#include "swipt/rng.hpp"
#include "swipt/sdp.hpp"

namespace swipt {

/// Lifted phase variable U = u u^H relaxed to Hermitian PSD with unit diagonal.
struct LiftedMatrix {
    CMat U;

    Eigen::Index size() const { return U.rows(); }
    double max_diagonal_deviation() const;
    double min_eigenvalue() const;
    /// (Tr U - ||U||_2) / Tr U; zero iff rank one.
    double rank_residual() const;
};

/// Quadratic-form data of the phase subproblem at fixed (w, rho).
///   Omega = Phi^H Phi,  R = t t^H with t = Phi^H L^{1/2} w,  E = Phi^H L Phi,
/// where Phi = [G_a diag(h_a), G_b diag(h_b)].
struct DcMatrices {
    CMat omega;
    CMat R;
    CMat E;
    CVec t;
    Eigen::Index n_a = 0;
};

DcMatrices build_dc_matrices(const ChannelSet& set, const PsVector& ps, const CVec& w);

/// Everything needed to evaluate the phase objective and the SINR constraint.
struct PhaseSubproblem {
    DcMatrices mats;
    double constant_terms = 0.0;  // P_in(||f||^2 - ||L^{1/2} f||^2) + sigma_r^2 (M - sum rho)
    double sinr_rhs = 0.0;        // gamma_0 (P_in |w^H L^{1/2} f|^2 + sigma_r^2 ||L^{1/2} w||^2 + delta^2 ||w||^2)
    SystemParams params;

    /// Harvested power at a lifted point, in watts.
    double objective(const CMat& U) const;
    double objective(const CVec& u) const;
    /// P_t Tr(R U); the constraint is signal_power(U) >= sinr_rhs.
    double signal_power(const CMat& U) const;
    double signal_power(const CVec& u) const;
};

PhaseSubproblem make_phase_subproblem(const ChannelSet& set, const CVec& f, const PsVector& ps, const CVec& w,
                                      const SystemParams& params);

/// u1 u1^H for a unit leading eigenvector u1 of U: a subgradient of ||.||_2 at U.
CMat spectral_penalty_subgradient(const CMat& U);

struct PenalizedSdpResult {
    LiftedMatrix lifted;
    double objective = 0.0;          // f(U) in watts
    double penalized_objective = 0.0;
    SdpStatus status = SdpStatus::MaxIters;
};

/// maximise f(U) - mu (Tr U - Re<dU_prev, U>) over the relaxed feasible set.
/// With mu == 0 (or an empty U_prev) this is the plain relaxation.
PenalizedSdpResult solve_penalized_sdp(const PhaseSubproblem& sub, const CMat& u_prev, double mu,
                                       const SdpOptions& options = {});

struct ExtractedPhases {
    PhaseConfig phases;
    double objective = 0.0;
    double signal_power = 0.0;
    bool feasible = false;
    int candidate = -1;  // 0 = leading eigenvector, k >= 1 = k-th randomisation
};

/// Unit-modulus projection of the leading eigenvector, compared against
/// `randomizations` Gaussian draws with covariance U.
ExtractedPhases extract_phase_config(const LiftedMatrix& lifted, Eigen::Index n_a, const PhaseSubproblem& sub,
                                     int randomizations, Rng& rng);

struct PenaltyConfig {
    double mu0 = 0.0;  // <= 0: 10 |f(U0)| / N
    double growth = 5.0;
    int max_dc_iters = 10;
    double rank_residual_tol = 1e-4;
};

struct PhaseStepResult {
    ExtractedPhases extracted;
    LiftedMatrix lifted;
    int dc_iters = 0;
    int sdp_iters = 0;
    SdpStatus status = SdpStatus::MaxIters;
};

/// Relaxation, then the rank-one penalty loop with growing mu, then extraction.
PhaseStepResult optimize_phases(const PhaseSubproblem& sub, const PenaltyConfig& penalty, const SdpOptions& sdp,
                                int randomizations, Rng& rng);

}  // namespace swipt
