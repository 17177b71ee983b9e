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

#include "swipt/alternating.hpp"

#include <cmath>
#include <stdexcept>

namespace swipt {

PhaseConfig co_phasing_init(const ChannelSet& set) {
    set.check_dimensions();
    const RVec amp_a = set.G_a.cwiseAbs() * set.h_a.cwiseAbs();
    const RVec amp_b = set.G_b.cwiseAbs() * set.h_b.cwiseAbs();
    Eigen::Index m_star = 0;
    (amp_a + amp_b).maxCoeff(&m_star);

    PhaseConfig p = PhaseConfig::zeros(set.h_a.size(), set.h_b.size());
    for (Eigen::Index k = 0; k < set.h_a.size(); ++k) {
        p.theta_a(k) = wrap_phase(-std::arg(set.G_a(m_star, k) * set.h_a(k)));
    }
    for (Eigen::Index k = 0; k < set.h_b.size(); ++k) {
        p.theta_b(k) = wrap_phase(-std::arg(set.G_b(m_star, k) * set.h_b(k)));
    }
    return p;
}

namespace {

struct Iterate {
    PhaseConfig phases;
    PsVector ps;
    CVec g;
    double q = 0.0;
};

double relative_gain(double now, double before) {
    return before > 0.0 ? (now - before) / before : (now > before ? 1.0 : 0.0);
}

}  // namespace

SolveReport alternating_optimize(const ChannelSet& set, const SystemParams& params, const AoConfig& cfg,
                                 const PhaseConfig& init) {
    params.validate();
    set.check_dimensions();
    if (set.regime != Regime::NearField) throw std::invalid_argument("alternating optimisation needs near-field channels");
    if (init.theta_a.size() != set.h_a.size() || init.theta_b.size() != set.h_b.size()) {
        throw std::invalid_argument("initial phase size mismatch");
    }
    const CVec& f = set.f;
    Rng rng(derive_seed(cfg.seed, 0, 0, StreamTag::Randomization));

    SolveReport rep;
    Iterate cur;
    cur.phases = init;
    cur.g = combined_channel(set, cur.phases);
    PsSolution ps0 = solve_ps_subproblem(cur.g, f, params, cfg.fpi, cfg.multiplier);
    if (ps0.status == SolveStatus::Infeasible) {
        rep.status = SolveStatus::Infeasible;
        rep.phases = cur.phases;
        rep.ps = ps0.ps;
        return rep;
    }
    cur.ps = ps0.ps;
    cur.q = harvested_power_near(cur.g, f, cur.ps, params);
    rep.iterate_trace.push_back(cur.q);

    rep.status = SolveStatus::MaxIters;
    for (int t = 1; t <= cfg.max_outer_iters; ++t) {
        rep.outer_iters = t;
        const double q_prev = cur.q;

        // Phase step at fixed (w, rho).
        const CVec w = mmse_beamformer(cur.g, f, cur.ps, params);
        const PhaseSubproblem sub = make_phase_subproblem(set, f, cur.ps, w, params);
        const PhaseStepResult step = optimize_phases(sub, cfg.penalty, cfg.sdp, cfg.randomizations, rng);
        bool accepted = false;
        if (step.status != SdpStatus::Infeasible && step.extracted.feasible) {
            const CVec g_new = combined_channel(set, step.extracted.phases);
            const double q_new = harvested_power_near(g_new, f, cur.ps, params);
            const double sinr_new = sinr(w, g_new, f, cur.ps, params);
            if (q_new >= cur.q && sinr_new >= params.sinr_threshold * (1.0 - cfg.multiplier.tolerance)) {
                cur.phases = step.extracted.phases;
                cur.g = g_new;
                cur.q = q_new;
                accepted = true;
            }
        }
        if (!accepted) ++rep.phase_steps_rejected;

        if (cfg.single_pass) {
            rep.iterate_trace.push_back(cur.q);
            rep.status = SolveStatus::Converged;
            break;
        }

        // PS step at the current phases.
        const PsSolution ps = solve_ps_subproblem(cur.g, f, params, cfg.fpi, cfg.multiplier);
        if (ps.status != SolveStatus::Infeasible) {
            const double q_new = harvested_power_near(cur.g, f, ps.ps, params);
            if (q_new >= cur.q) {
                cur.ps = ps.ps;
                cur.q = q_new;
            }
        }
        rep.iterate_trace.push_back(cur.q);
        if (relative_gain(cur.q, q_prev) < cfg.convergence_threshold) {
            rep.status = SolveStatus::Converged;
            break;
        }
    }

    rep.phases = cur.phases;
    rep.ps = cur.ps;
    rep.harvested_power = cur.q;
    rep.w = mmse_beamformer(cur.g, f, cur.ps, params);
    rep.sinr_achieved = mmse_sinr(cur.g, f, cur.ps, params);
    return rep;
}

SolveReport alternating_optimize(const ChannelSet& set, const SystemParams& params, const AoConfig& cfg) {
    return alternating_optimize(set, params, cfg, co_phasing_init(set));
}

}  // namespace swipt
