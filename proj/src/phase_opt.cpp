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

#include "swipt/phase_opt.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace swipt {

double LiftedMatrix::max_diagonal_deviation() const {
    return (U.diagonal().array() - cplx(1.0, 0.0)).abs().maxCoeff();
}

double LiftedMatrix::min_eigenvalue() const {
    return Eigen::SelfAdjointEigenSolver<CMat>(U, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

double LiftedMatrix::rank_residual() const {
    const RVec ev = Eigen::SelfAdjointEigenSolver<CMat>(U, Eigen::EigenvaluesOnly).eigenvalues();
    const double tr = U.trace().real();
    return (tr - ev(ev.size() - 1)) / tr;
}

DcMatrices build_dc_matrices(const ChannelSet& set, const PsVector& ps, const CVec& w) {
    if (set.regime != Regime::NearField) throw std::invalid_argument("phase design needs near-field channels");
    set.check_dimensions();
    if (w.size() != set.antennas() || ps.size() != set.antennas()) {
        throw std::invalid_argument("beamformer or PS size mismatch");
    }
    const auto na = set.h_a.size();
    const auto nb = set.h_b.size();
    CMat phi(set.antennas(), na + nb);
    phi.leftCols(na) = set.G_a * set.h_a.asDiagonal();
    phi.rightCols(nb) = set.G_b * set.h_b.asDiagonal();

    DcMatrices out;
    out.n_a = na;
    out.omega = phi.adjoint() * phi;
    const CVec lw = ps.sqrt_rho().cast<cplx>().cwiseProduct(w);
    out.t = phi.adjoint() * lw;
    out.R = out.t * out.t.adjoint();
    const CMat upsilon = ps.sqrt_rho().cast<cplx>().asDiagonal() * phi;
    out.E = upsilon.adjoint() * upsilon;
    return out;
}

double PhaseSubproblem::objective(const CMat& U) const {
    const double quad = ((mats.omega - mats.E).array() * U.transpose().array()).sum().real();
    return params.harvest_efficiency * (params.transmit_power * quad + constant_terms);
}

double PhaseSubproblem::objective(const CVec& u) const {
    const double quad = u.dot((mats.omega - mats.E) * u).real();
    return params.harvest_efficiency * (params.transmit_power * quad + constant_terms);
}

double PhaseSubproblem::signal_power(const CMat& U) const {
    return params.transmit_power * (mats.R.array() * U.transpose().array()).sum().real();
}

double PhaseSubproblem::signal_power(const CVec& u) const {
    return params.transmit_power * std::norm(mats.t.dot(u));
}

PhaseSubproblem make_phase_subproblem(const ChannelSet& set, const CVec& f, const PsVector& ps, const CVec& w,
                                      const SystemParams& params) {
    PhaseSubproblem sub;
    sub.mats = build_dc_matrices(set, ps, w);
    sub.params = params;
    const auto m = static_cast<double>(ps.size());
    sub.constant_terms = params.interference_power * (f.squaredNorm() - ps.rho.dot(f.cwiseAbs2())) +
                         params.antenna_noise * (m - ps.rho.sum());
    const CVec lw = ps.sqrt_rho().cast<cplx>().cwiseProduct(w);
    const double denom =
        params.interference_power * std::norm(lw.dot(f)) + params.antenna_noise * lw.squaredNorm() +
        params.id_noise * w.squaredNorm();
    sub.sinr_rhs = params.sinr_threshold * denom;
    return sub;
}

CMat spectral_penalty_subgradient(const CMat& U) {
    Eigen::SelfAdjointEigenSolver<CMat> es(U);
    const CVec u1 = es.eigenvectors().col(U.rows() - 1);
    return u1 * u1.adjoint();
}

PenalizedSdpResult solve_penalized_sdp(const PhaseSubproblem& sub, const CMat& u_prev, double mu,
                                       const SdpOptions& options) {
    const auto n = sub.mats.omega.rows();
    const auto& p = sub.params;
    UnitDiagonalSdp sdp;
    sdp.objective = p.harvest_efficiency * p.transmit_power * (sub.mats.omega - sub.mats.E);
    CMat sub_grad;
    const bool penalised = mu > 0.0 && u_prev.size() > 0;
    if (penalised) {
        sub_grad = spectral_penalty_subgradient(u_prev);
        sdp.objective += mu * sub_grad;
    }
    sdp.side_matrices.push_back(p.transmit_power * sub.mats.R);
    sdp.side_rhs.push_back(sub.sinr_rhs);

    const SdpResult res = solve_unit_diagonal_sdp(sdp, options);
    PenalizedSdpResult out;
    out.lifted.U = res.X;
    out.status = res.status;
    out.objective = sub.objective(res.X);
    out.penalized_objective = out.objective;
    if (penalised) {
        const double lin = (sub_grad.array() * res.X.transpose().array()).sum().real();
        out.penalized_objective -= mu * (res.X.trace().real() - lin);
    }
    (void)n;
    return out;
}

ExtractedPhases extract_phase_config(const LiftedMatrix& lifted, Eigen::Index n_a, const PhaseSubproblem& sub,
                                     int randomizations, Rng& rng) {
    const auto n = lifted.size();
    Eigen::SelfAdjointEigenSolver<CMat> es(lifted.U);

    auto project = [](const CVec& v) {
        CVec u(v.size());
        for (Eigen::Index k = 0; k < v.size(); ++k) {
            const double a = std::abs(v(k));
            u(k) = a < 1e-12 ? cplx(1.0, 0.0) : v(k) / a;
        }
        return u;
    };

    ExtractedPhases best;
    double best_violation = std::numeric_limits<double>::infinity();
    CVec best_u;
    const double feas_tol = 1e-9 * std::max(1e-300, sub.sinr_rhs);
    auto consider = [&](const CVec& u, int idx) {
        const double q = sub.objective(u);
        const double sig = sub.signal_power(u);
        const double violation = std::max(0.0, sub.sinr_rhs - sig);
        const bool feasible = violation <= feas_tol;
        const bool take = feasible ? (!best.feasible || q > best.objective)
                                   : (!best.feasible && violation < best_violation);
        if (take) {
            best.objective = q;
            best.signal_power = sig;
            best.feasible = feasible;
            best.candidate = idx;
            best_violation = violation;
            best_u = u;
        }
    };

    consider(project(es.eigenvectors().col(n - 1)), 0);

    if (randomizations > 0) {
        // Covariance square root from the eigendecomposition.
        const RVec ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        const CMat root = es.eigenvectors() * ev.cast<cplx>().asDiagonal();
        CVec z(n);
        for (int r = 1; r <= randomizations; ++r) {
            for (Eigen::Index k = 0; k < n; ++k) z(k) = rng.complex_gaussian(1.0);
            consider(project(root * z), r);
        }
    }
    best.phases = PhaseConfig::from_stacked(best_u, n_a);
    return best;
}

PhaseStepResult optimize_phases(const PhaseSubproblem& sub, const PenaltyConfig& penalty, const SdpOptions& sdp,
                                int randomizations, Rng& rng) {
    const auto n = static_cast<double>(sub.mats.omega.rows());
    PhaseStepResult out;

    PenalizedSdpResult cur = solve_penalized_sdp(sub, CMat(), 0.0, sdp);
    out.status = cur.status;
    if (cur.status == SdpStatus::Infeasible) {
        out.lifted = cur.lifted;
        return out;
    }
    double mu = penalty.mu0 > 0.0 ? penalty.mu0 : 10.0 * std::abs(cur.objective) / n;
    for (int it = 1; it <= penalty.max_dc_iters; ++it) {
        if (cur.lifted.rank_residual() <= penalty.rank_residual_tol) break;
        PenalizedSdpResult next = solve_penalized_sdp(sub, cur.lifted.U, mu, sdp);
        out.dc_iters = it;
        if (next.status == SdpStatus::Infeasible) break;
        cur = std::move(next);
        out.status = cur.status;
        mu *= penalty.growth;
    }
    out.lifted = cur.lifted;
    out.extracted = extract_phase_config(out.lifted, sub.mats.n_a, sub, randomizations, rng);
    return out;
}

}  // namespace swipt
