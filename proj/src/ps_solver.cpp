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

#include "swipt/ps_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swipt {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIters: return "MaxIters";
        case SolveStatus::Infeasible: return "Infeasible";
    }
    return "Unknown";
}

PsVector ps_fixed_point_step(const PsVector& ps, const CVec& g, const CVec& f, const SystemParams& params,
                             double lambda, double damping) {
    const RVec grad = mmse_sinr_gradient(g, f, ps, params);
    const RVec c = received_power(g, f, params);
    PsVector next{RVec(ps.size())};
    for (Eigen::Index m = 0; m < ps.size(); ++m) {
        const double target =
            std::clamp(ps.rho(m) * std::sqrt(std::max(lambda, 0.0) * grad(m) / (params.harvest_efficiency * c(m))),
                       0.0, 1.0);
        next.rho(m) = (1.0 - damping) * ps.rho(m) + damping * target;
    }
    return next;
}

FpiResult ps_fixed_point(const CVec& g, const CVec& f, const SystemParams& params, double lambda,
                         const FpiConfig& cfg) {
    FpiResult out{PsVector::uniform(g.size(), 0.5)};
    if (lambda <= 0.0) {
        out.ps.rho.setZero();
        out.converged = true;
        return out;
    }
    double damping = cfg.damping;
    double prev_residual = std::numeric_limits<double>::infinity();
    int rising = 0;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        PsVector next = ps_fixed_point_step(out.ps, g, f, params, lambda, damping);
        const double residual = (next.rho - out.ps.rho).cwiseAbs().maxCoeff();
        out.ps = std::move(next);
        out.iterations = it;
        if (residual < cfg.tolerance) {
            out.converged = true;
            break;
        }
        rising = residual > prev_residual ? rising + 1 : 0;
        if (rising >= 3) {
            damping *= 0.5;
            rising = 0;
        }
        prev_residual = residual;
    }
    return out;
}

namespace {

struct LambdaProbe {
    PsVector ps;
    double sinr = 0.0;
};

LambdaProbe probe(const CVec& g, const CVec& f, const SystemParams& params, double lambda, const FpiConfig& fpi) {
    auto fp = ps_fixed_point(g, f, params, lambda, fpi);
    const double s = mmse_sinr(g, f, fp.ps, params);
    return {std::move(fp.ps), s};
}

}  // namespace

PsSolution solve_ps_subproblem(const CVec& g, const CVec& f, const SystemParams& params, const FpiConfig& fpi,
                               const MultiplierConfig& mult) {
    const double gamma0 = params.sinr_threshold;
    const auto m = g.size();
    PsSolution sol;

    const PsVector all_id = PsVector::uniform(m, 1.0);
    const double sinr_max = mmse_sinr(g, f, all_id, params);
    if (sinr_max < gamma0) {
        sol.ps = all_id;
        sol.sinr = sinr_max;
        sol.harvested_power = 0.0;
        sol.status = SolveStatus::Infeasible;
        return sol;
    }

    // Initial multiplier from stationarity at the midpoint of the box.
    const PsVector mid = PsVector::uniform(m, 0.5);
    const RVec grad = mmse_sinr_gradient(g, f, mid, params);
    const RVec c = received_power(g, f, params);
    double lambda = 0.0;
    for (Eigen::Index k = 0; k < m; ++k) lambda += params.harvest_efficiency * c(k) / std::max(grad(k), 1e-300);
    lambda /= static_cast<double>(m);

    double step = mult.step;
    if (step <= 0.0) {
        const auto p0 = probe(g, f, params, lambda, fpi);
        const auto p1 = probe(g, f, params, 1.5 * lambda, fpi);
        const double slope = (p1.sinr - p0.sinr) / (0.5 * lambda);
        step = slope > 0.0 ? 1.0 / slope : lambda / gamma0;
    }

    // SINR is non-decreasing in lambda. Near the point where rho = 0 stops being
    // attracting it is very steep, so steps leaving the bracket are replaced by bisection.
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    LambdaProbe current;
    double probed = lambda;
    for (int t = 1; t <= mult.max_iters; ++t) {
        current = probe(g, f, params, lambda, fpi);
        probed = lambda;
        sol.multiplier_iters = t;
        const double residual = gamma0 - current.sinr;
        if (std::abs(residual) <= mult.tolerance * gamma0) {
            sol.status = SolveStatus::Converged;
            break;
        }
        if (residual > 0.0) {
            lo = lambda;
        } else {
            hi = lambda;
        }
        const double candidate = lambda + step / std::sqrt(static_cast<double>(t)) * residual;
        if (candidate > lo && candidate < hi) {
            lambda = candidate;
        } else if (std::isfinite(hi)) {
            lambda = 0.5 * (lo + hi);
        } else {
            lambda = 2.0 * lo;
        }
        if (std::isfinite(hi) && hi - lo <= 1e-15 * hi) break;
    }
    sol.ps = std::move(current.ps);
    sol.lambda = probed;
    sol.sinr = current.sinr;
    sol.harvested_power = harvested_power_near(g, f, sol.ps, params);
    return sol;
}

PsSolution solve_equal_ps(const CVec& g, const CVec& f, const SystemParams& params, double tolerance) {
    const double gamma0 = params.sinr_threshold;
    const auto m = g.size();
    PsSolution sol;
    auto sinr_at = [&](double r) { return mmse_sinr(g, f, PsVector::uniform(m, r), params); };
    if (sinr_at(1.0) < gamma0) {
        sol.ps = PsVector::uniform(m, 1.0);
        sol.sinr = sinr_at(1.0);
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double midr = 0.5 * (lo + hi);
        const double s = sinr_at(midr);
        if (s >= gamma0) {
            hi = midr;
        } else {
            lo = midr;
        }
        sol.multiplier_iters = it + 1;
        if (std::abs(sinr_at(hi) - gamma0) <= tolerance * gamma0 || hi - lo < 1e-15) break;
    }
    sol.ps = PsVector::uniform(m, hi);
    sol.sinr = sinr_at(hi);
    sol.harvested_power = harvested_power_near(g, f, sol.ps, params);
    sol.status = SolveStatus::Converged;
    return sol;
}

}  // namespace swipt
