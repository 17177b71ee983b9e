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

/// maximise   Re Tr(C X)
/// subject to X_ii = 1,  Re Tr(A_k X) >= b_k,  X Hermitian PSD.
struct UnitDiagonalSdp {
    CMat objective;
    std::vector<CMat> side_matrices;
    std::vector<double> side_rhs;
};

struct SdpOptions {
    double tolerance = 1e-9;  // relative primal/dual residual and gap
    int max_iters = 120;
};

enum class SdpStatus { Optimal, Infeasible, MaxIters };

const char* to_string(SdpStatus s);

struct SdpResult {
    CMat X;
    double primal_objective = 0.0;  // Re Tr(C X), unscaled
    double dual_objective = 0.0;
    double primal_residual = 0.0;   // relative, before diagonal repair
    double dual_residual = 0.0;
    int iterations = 0;
    SdpStatus status = SdpStatus::MaxIters;
};

/// Infeasible-start primal-dual interior point method (HKM direction with
/// Mehrotra predictor-corrector). The Schur complement for the diagonal
/// constraints is the Hadamard product Re(X o conj(Z^{-1})), so one iteration
/// costs O(n^3). The returned X has its diagonal rescaled to exactly one.
SdpResult solve_unit_diagonal_sdp(const UnitDiagonalSdp& problem, const SdpOptions& options = {});

/// Largest step alpha in [0, cap] keeping X + alpha dX PSD, given the Cholesky
/// factor of X.
double max_psd_step(const Eigen::LLT<CMat>& chol_x, const CMat& dx, double cap);

}  // namespace swipt
