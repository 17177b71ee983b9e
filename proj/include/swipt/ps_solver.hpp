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

#include "swipt/receiver.hpp"

namespace swipt {

enum class SolveStatus { Converged, MaxIters, Infeasible };

const char* to_string(SolveStatus s);

struct FpiConfig {
    double tolerance = 1e-8;
    int max_iters = 200;
    double damping = 1.0;
};

struct MultiplierConfig {
    double step = 0.0;          // s0; <= 0 selects a secant-scaled step
    int max_iters = 2000;
    double tolerance = 1e-5;    // on |SINR - gamma_0| / gamma_0
};

struct FpiResult {
    PsVector ps;
    int iterations = 0;
    bool converged = false;
};

/// One update of the stationarity fixed point at multiplier lambda:
///   rho_m <- [ delta sqrt(lambda) |g_hat^H [S~^{-1}]_{:,m}| / sqrt(eta c_m) ]_0^1
/// where S~ = f_hat f_hat^H + delta^2 L^{-1} + sigma_r^2 I is evaluated at the
/// input rho and c_m is the per-antenna received power. Since
/// g_hat^H [S~^{-1}]_{:,m} = rho_m sqrt(P_t) conj(v_m), the update is computed as
/// rho_m sqrt(lambda * dSINR/drho_m / (eta c_m)), which is finite on the box.
PsVector ps_fixed_point_step(const PsVector& ps, const CVec& g, const CVec& f, const SystemParams& params,
                             double lambda, double damping = 1.0);

/// Iterates ps_fixed_point_step from rho = 0.5 until the update stalls.
FpiResult ps_fixed_point(const CVec& g, const CVec& f, const SystemParams& params, double lambda,
                         const FpiConfig& cfg);

struct PsSolution {
    PsVector ps;
    double lambda = 0.0;
    double sinr = 0.0;
    double harvested_power = 0.0;
    int multiplier_iters = 0;
    SolveStatus status = SolveStatus::MaxIters;
};

/// Maximises harvested power subject to the MMSE SINR constraint: projected
/// subgradient on the multiplier, lambda <- max(0, lambda + s0/sqrt(t) (gamma_0 - SINR)),
/// with the fixed point solved at every lambda.
PsSolution solve_ps_subproblem(const CVec& g, const CVec& f, const SystemParams& params, const FpiConfig& fpi,
                               const MultiplierConfig& mult);

/// Common ratio for all antennas making the MMSE SINR equal gamma_0 (bisection).
PsSolution solve_equal_ps(const CVec& g, const CVec& f, const SystemParams& params, double tolerance = 1e-8);

}  // namespace swipt
