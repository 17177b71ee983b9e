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

#include "swipt/schemes.hpp"

#include <cmath>
#include <stdexcept>

#include "swipt/hybridfield.hpp"

namespace swipt {

TrialRealization realize_trial(const Scenario& scenario, std::uint64_t trial, std::uint64_t cell) {
    TrialRealization r;
    r.trial = trial;
    r.cell = cell;
    const std::uint64_t master = scenario.master_seed;

    Rng pos(master, trial, cell, StreamTag::UserPosition);
    const double radius = scenario.user_radius * std::sqrt(pos.uniform());
    const double angle = kTwoPi * pos.uniform();
    r.user_centroid = scenario.user_center + Vec3{radius * std::cos(angle), 0.0, radius * std::sin(angle)};

    Rng intf(master, trial, cell, StreamTag::Interference);
    const double df = norm(scenario.interferer - r.user_centroid);
    const double var = scenario.interference_gain / std::pow(df, scenario.interference_exponent);
    CVec f(scenario.antenna_count);
    for (Eigen::Index m = 0; m < f.size(); ++m) f(m) = intf.complex_gaussian(var);

    const SystemGeometry geo = scenario.geometry_at(r.user_centroid);
    if (scenario.regime == Regime::NearField) {
        r.channels = build_near_field_channels(geo, scenario.wavelength, f);
    } else {
        r.channels.f = f;
        r.channels.regime = Regime::HybridField;
        r.gain_a = hybrid_gain_numeric(geo.irs1, scenario.far_a);
        r.gain_b = hybrid_gain_numeric(geo.irs2, scenario.far_b);
        PanelGrid single = PanelGrid::from_panel(geo.irs1);
        single.n_x *= 2;
        r.gain_single = hybrid_gain_numeric(single, scenario.far_a);
    }
    return r;
}

namespace {

ResultRow infeasible_row(SchemeId scheme) {
    ResultRow row;
    row.scheme = scheme;
    row.status = SolveStatus::Infeasible;
    return row;
}

const SolveReport& proposed_near(const TrialRealization& r, const Scenario& s, TrialCache& cache) {
    if (!cache.proposed) {
        AoConfig cfg = s.ao;
        cfg.seed = derive_seed(s.master_seed, r.trial, r.cell, StreamTag::Randomization);
        cache.proposed = alternating_optimize(r.channels, s.params, cfg);
    }
    return *cache.proposed;
}

ResultRow run_near(SchemeId scheme, const TrialRealization& r, const Scenario& s, TrialCache& cache) {
    const CVec& f = r.channels.f;
    const SystemParams& p = s.params;
    ResultRow row;
    row.scheme = scheme;
    switch (scheme) {
        case SchemeId::Proposed: {
            const SolveReport& rep = proposed_near(r, s, cache);
            row.status = rep.status;
            if (rep.status != SolveStatus::Infeasible) {
                row.harvested_power_w = rep.harvested_power;
                row.sinr_linear = rep.sinr_achieved;
            }
            return row;
        }
        case SchemeId::ComAlgorithm: {
            AoConfig cfg = s.ao;
            cfg.single_pass = true;
            cfg.seed = derive_seed(s.master_seed, r.trial, r.cell, StreamTag::Randomization);
            const SolveReport rep = alternating_optimize(r.channels, p, cfg);
            row.status = rep.status;
            if (rep.status != SolveStatus::Infeasible) {
                row.harvested_power_w = rep.harvested_power;
                row.sinr_linear = rep.sinr_achieved;
            }
            return row;
        }
        case SchemeId::EqualPS: {
            const SolveReport& rep = proposed_near(r, s, cache);
            if (rep.status == SolveStatus::Infeasible) return infeasible_row(scheme);
            const CVec g = combined_channel(r.channels, rep.phases);
            const PsSolution sol = solve_equal_ps(g, f, p);
            row.status = sol.status;
            if (sol.status != SolveStatus::Infeasible) {
                row.harvested_power_w = sol.harvested_power;
                row.sinr_linear = sol.sinr;
            }
            return row;
        }
        case SchemeId::RandomPS: {
            const SolveReport& rep = proposed_near(r, s, cache);
            if (rep.status == SolveStatus::Infeasible) return infeasible_row(scheme);
            const CVec g = combined_channel(r.channels, rep.phases);
            Rng rng(s.master_seed, r.trial, r.cell, StreamTag::RandomPs);
            PsVector ps = PsVector::uniform(f.size(), 0.0);
            for (int attempt = 0; attempt < 100; ++attempt) {
                for (Eigen::Index m = 0; m < f.size(); ++m) ps.rho(m) = rng.uniform();
                const double sv = mmse_sinr(g, f, ps, p);
                if (sv >= p.sinr_threshold) {
                    row.status = SolveStatus::Converged;
                    row.harvested_power_w = harvested_power_near(g, f, ps, p);
                    row.sinr_linear = sv;
                    return row;
                }
            }
            return infeasible_row(scheme);
        }
        case SchemeId::RandomPhase: {
            Rng rng(s.master_seed, r.trial, r.cell, StreamTag::RandomPhase);
            PhaseConfig ph = PhaseConfig::zeros(r.channels.h_a.size(), r.channels.h_b.size());
            for (Eigen::Index k = 0; k < ph.theta_a.size(); ++k) ph.theta_a(k) = rng.uniform(0.0, kTwoPi);
            for (Eigen::Index k = 0; k < ph.theta_b.size(); ++k) ph.theta_b(k) = rng.uniform(0.0, kTwoPi);
            const CVec g = combined_channel(r.channels, ph);
            const PsSolution sol = solve_ps_subproblem(g, f, p, s.ao.fpi, s.ao.multiplier);
            row.status = sol.status;
            if (sol.status != SolveStatus::Infeasible) {
                row.harvested_power_w = sol.harvested_power;
                row.sinr_linear = sol.sinr;
            }
            return row;
        }
        case SchemeId::SingleIrs: break;
    }
    throw std::invalid_argument(std::string(to_string(scheme)) + " is not a near-field scheme");
}

ResultRow from_hybrid(SchemeId scheme, const HybridPsSolution& sol) {
    ResultRow row;
    row.scheme = scheme;
    row.status = sol.status;
    if (sol.status != SolveStatus::Infeasible) {
        row.harvested_power_w = sol.harvested_power;
        row.sinr_linear = sol.sinr;
    }
    return row;
}

ResultRow run_hybrid(SchemeId scheme, const TrialRealization& r, const Scenario& s) {
    const CVec& f = r.channels.f;
    const SystemParams& p = s.params;
    switch (scheme) {
        case SchemeId::Proposed: return from_hybrid(scheme, solve_hybrid_ps(r.gain_a, r.gain_b, f, p));
        case SchemeId::EqualPS: return from_hybrid(scheme, solve_hybrid_equal_ps(r.gain_a, r.gain_b, f, p));
        case SchemeId::SingleIrs: return from_hybrid(scheme, solve_hybrid_ps(r.gain_single, 0.0, f, p));
        case SchemeId::RandomPS: {
            Rng rng(s.master_seed, r.trial, r.cell, StreamTag::RandomPs);
            PsVector ps = PsVector::uniform(f.size(), 0.0);
            for (int attempt = 0; attempt < 100; ++attempt) {
                for (Eigen::Index m = 0; m < f.size(); ++m) ps.rho(m) = rng.uniform();
                const double sv = hybrid_average_sinr(r.gain_a, r.gain_b, f, ps, p);
                if (sv >= p.sinr_threshold) {
                    ResultRow row;
                    row.scheme = scheme;
                    row.status = SolveStatus::Converged;
                    row.harvested_power_w = harvested_power_hybrid(r.gain_a, r.gain_b, f, ps, p);
                    row.sinr_linear = sv;
                    return row;
                }
            }
            return infeasible_row(scheme);
        }
        case SchemeId::RandomPhase:
        case SchemeId::ComAlgorithm: break;
    }
    throw std::invalid_argument(std::string(to_string(scheme)) + " is not a hybrid-field scheme");
}

}  // namespace

ResultRow run_scheme(SchemeId scheme, const TrialRealization& realized, const Scenario& scenario, TrialCache& cache) {
    ResultRow row = scenario.regime == Regime::NearField ? run_near(scheme, realized, scenario, cache)
                                                         : run_hybrid(scheme, realized, scenario);
    row.trial = realized.trial;
    return row;
}

ResultRow run_scheme(SchemeId scheme, const TrialRealization& realized, const Scenario& scenario) {
    TrialCache cache;
    return run_scheme(scheme, realized, scenario, cache);
}

}  // namespace swipt
