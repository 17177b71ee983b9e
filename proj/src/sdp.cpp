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

#include "swipt/sdp.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace swipt {

const char* to_string(SdpStatus s) {
    switch (s) {
        case SdpStatus::Optimal: return "Optimal";
        case SdpStatus::Infeasible: return "Infeasible";
        case SdpStatus::MaxIters: return "MaxIters";
    }
    return "Unknown";
}

namespace {

double inner(const CMat& a, const CMat& b) {
    // Re Tr(A^H B) = Re Tr(A B) for Hermitian A.
    return (a.array().conjugate() * b.array()).real().sum();
}

CMat hermitian_part(const CMat& g) { return 0.5 * (g + g.adjoint()); }

}  // namespace

double max_psd_step(const Eigen::LLT<CMat>& chol_x, const CMat& dx, double cap) {
    CMat t = chol_x.matrixL().solve(dx);
    t = chol_x.matrixL().solve(t.adjoint().eval()).adjoint().eval();
    t = hermitian_part(t);
    Eigen::SelfAdjointEigenSolver<CMat> es(t, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues()(0);
    if (lmin >= 0.0) return cap;
    return std::min(cap, -1.0 / lmin);
}

namespace {

double max_positive_step(const RVec& s, const RVec& ds, double cap) {
    double a = cap;
    for (Eigen::Index k = 0; k < s.size(); ++k) {
        if (ds(k) < 0.0) a = std::min(a, -s(k) / ds(k));
    }
    return a;
}

struct Direction {
    CMat dX;
    CMat dZ;
    RVec dy;
    RVec dv;
    RVec ds;
};

}  // namespace

SdpResult solve_unit_diagonal_sdp(const UnitDiagonalSdp& problem, const SdpOptions& options) {
    const Eigen::Index n = problem.objective.rows();
    if (problem.objective.cols() != n || n == 0) throw std::invalid_argument("SDP objective must be square");
    if (problem.side_matrices.size() != problem.side_rhs.size()) {
        throw std::invalid_argument("side constraint count mismatch");
    }
    const auto K = static_cast<Eigen::Index>(problem.side_matrices.size());
    for (const auto& a : problem.side_matrices) {
        if (a.rows() != n || a.cols() != n) throw std::invalid_argument("side constraint matrix size mismatch");
    }

    // Minimisation form with scaled data.
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    const double c_norm = problem.objective.norm();
    const double c_scale = c_norm > 0.0 ? c_norm / sqrt_n : 1.0;
    const CMat C = -hermitian_part(problem.objective) / c_scale;
    std::vector<CMat> A(static_cast<size_t>(K));
    RVec b(K);
    for (Eigen::Index k = 0; k < K; ++k) {
        const auto& ak = problem.side_matrices[static_cast<size_t>(k)];
        const double an = ak.norm();
        const double a_scale = an > 0.0 ? an / sqrt_n : 1.0;
        A[static_cast<size_t>(k)] = hermitian_part(ak) / a_scale;
        b(k) = problem.side_rhs[static_cast<size_t>(k)] / a_scale;
    }

    CMat X = CMat::Identity(n, n);
    RVec s = RVec::Ones(K);
    RVec v = RVec::Ones(K);
    CMat base = C;
    for (const auto& ak : A) base -= ak;
    const double lmin = Eigen::SelfAdjointEigenSolver<CMat>(base, Eigen::EigenvaluesOnly).eigenvalues()(0);
    RVec y = RVec::Constant(n, lmin - 1.0);
    CMat Z = base;
    Z.diagonal().array() -= (lmin - 1.0);

    const double b_norm = std::sqrt(static_cast<double>(n) + b.squaredNorm());
    const double cn = C.norm();
    const auto m_total = static_cast<double>(n + K);

    SdpResult result;
    auto residuals = [&](RVec& rp, RVec& rq, CMat& Rd) {
        rp = RVec::Ones(n) - X.diagonal().real();
        rq.resize(K);
        for (Eigen::Index k = 0; k < K; ++k) rq(k) = b(k) - inner(A[static_cast<size_t>(k)], X) + s(k);
        Rd = C - Z;
        Rd.diagonal() -= y.cast<cplx>();
        for (Eigen::Index k = 0; k < K; ++k) Rd -= v(k) * A[static_cast<size_t>(k)];
    };

    RVec rp, rq;
    CMat Rd;
    for (int it = 1; it <= options.max_iters; ++it) {
        result.iterations = it;
        residuals(rp, rq, Rd);
        const double mu = (inner(X, Z) + s.dot(v)) / m_total;
        const double pobj = inner(C, X);
        const double dobj = y.sum() + b.dot(v);
        const double p_inf = std::sqrt(rp.squaredNorm() + rq.squaredNorm()) / (1.0 + b_norm);
        const double d_inf = Rd.norm() / (1.0 + cn);
        const double gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
        result.primal_residual = p_inf;
        result.dual_residual = d_inf;
        if (p_inf <= options.tolerance && d_inf <= options.tolerance && gap <= options.tolerance) {
            result.status = SdpStatus::Optimal;
            break;
        }
        // Diverging dual with stalled primal infeasibility signals an empty feasible set.
        if (std::abs(dobj) > 1e12 * (1.0 + std::abs(pobj)) && p_inf > 1e-6) {
            result.status = SdpStatus::Infeasible;
            break;
        }

        const Eigen::LLT<CMat> chol_z(Z);
        const Eigen::LLT<CMat> chol_x(X);
        if (chol_z.info() != Eigen::Success || chol_x.info() != Eigen::Success) break;
        CMat W = chol_z.solve(CMat::Identity(n, n));
        W = hermitian_part(W);

        // Schur complement.
        const Eigen::Index dim = n + K;
        RMat M(dim, dim);
        M.topLeftCorner(n, n) = (X.array() * W.transpose().array()).real().matrix();
        std::vector<CMat> XAW(static_cast<size_t>(K));
        for (Eigen::Index k = 0; k < K; ++k) {
            XAW[static_cast<size_t>(k)] = X * A[static_cast<size_t>(k)] * W;
            M.block(0, n + k, n, 1) = XAW[static_cast<size_t>(k)].diagonal().real();
            M.block(n + k, 0, 1, n) = M.block(0, n + k, n, 1).transpose();
        }
        for (Eigen::Index k = 0; k < K; ++k) {
            for (Eigen::Index l = 0; l < K; ++l) {
                M(n + k, n + l) = (A[static_cast<size_t>(k)].array() * XAW[static_cast<size_t>(l)].transpose().array())
                                      .sum()
                                      .real();
            }
            M(n + k, n + k) += s(k) / v(k);
        }
        const Eigen::LDLT<RMat> schur(M);
        if (schur.info() != Eigen::Success) break;

        auto solve_direction = [&](const CMat& target, const RVec& slack_target) {
            // G = T W - X - X Rd W + X Diag(dy) W + sum dv X A W
            const CMat base_g = hermitian_part(target * W - X - X * Rd * W);
            RVec rhs(dim);
            rhs.head(n) = rp - base_g.diagonal().real();
            for (Eigen::Index k = 0; k < K; ++k) {
                rhs(n + k) = rq(k) - inner(A[static_cast<size_t>(k)], base_g) + (slack_target(k) - s(k) * v(k)) / v(k);
            }
            const RVec sol = schur.solve(rhs);
            Direction d;
            d.dy = sol.head(n);
            d.dv = sol.tail(K);
            d.dZ = Rd;
            d.dZ.diagonal() -= d.dy.cast<cplx>();
            for (Eigen::Index k = 0; k < K; ++k) d.dZ -= d.dv(k) * A[static_cast<size_t>(k)];
            d.dX = hermitian_part(target * W - X - X * d.dZ * W);
            d.ds.resize(K);
            for (Eigen::Index k = 0; k < K; ++k) d.ds(k) = (slack_target(k) - s(k) * v(k) - s(k) * d.dv(k)) / v(k);
            return d;
        };
        auto step_lengths = [&](const Direction& d, double& ap, double& ad) {
            ap = max_psd_step(chol_x, d.dX, 1.0 / 0.95);
            ap = max_positive_step(s, d.ds, ap);
            ad = max_psd_step(chol_z, d.dZ, 1.0 / 0.95);
            ad = max_positive_step(v, d.dv, ad);
        };

        // Predictor.
        const Direction aff = solve_direction(CMat::Zero(n, n), RVec::Zero(K));
        double ap = 0.0;
        double ad = 0.0;
        step_lengths(aff, ap, ad);
        ap = std::min(1.0, ap);
        ad = std::min(1.0, ad);
        const double mu_aff =
            (inner(X + ap * aff.dX, Z + ad * aff.dZ) + (s + ap * aff.ds).dot(v + ad * aff.dv)) / m_total;
        const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

        // Corrector.
        CMat target = -aff.dX * aff.dZ;
        target.diagonal().array() += sigma * mu;
        RVec slack_target = RVec::Constant(K, sigma * mu) - aff.ds.cwiseProduct(aff.dv);
        const Direction d = solve_direction(target, slack_target);
        step_lengths(d, ap, ad);
        ap = std::min(1.0, 0.95 * ap);
        ad = std::min(1.0, 0.95 * ad);

        X = hermitian_part(X + ap * d.dX);
        s += ap * d.ds;
        Z = hermitian_part(Z + ad * d.dZ);
        y += ad * d.dy;
        v += ad * d.dv;
    }

    if (result.status == SdpStatus::MaxIters && result.primal_residual > 1e-6) {
        result.status = SdpStatus::Infeasible;
    }

    // Exact unit diagonal by congruence with D^{-1/2}; keeps X PSD.
    RVec dscale = X.diagonal().real().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    X = dscale.cast<cplx>().asDiagonal() * X * dscale.cast<cplx>().asDiagonal();
    X = hermitian_part(X);
    for (Eigen::Index i = 0; i < n; ++i) X(i, i) = 1.0;

    result.X = std::move(X);
    result.primal_objective = inner(hermitian_part(problem.objective), result.X);
    result.dual_objective = -(y.sum() + b.dot(v)) * c_scale;
    return result;
}

}  // namespace swipt
