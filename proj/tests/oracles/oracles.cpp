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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace swipt::oracle {

double gain_sum_euclidean(int n_x, int n_z, double spacing, double area, double l_x, double l_y,
                          const FarFieldStats& stats) {
    double sum = 0.0;
    for (int i = 0; i < n_x; ++i) {
        const double x = l_x + (i - 0.5 * (n_x - 1)) * spacing;
        for (int j = 0; j < n_z; ++j) {
            const double z = (j - 0.5 * (n_z - 1)) * spacing;
            const double r2 = x * x + l_y * l_y + z * z;
            const double cos_incidence = std::abs(l_y) / std::sqrt(r2);
            sum += area * cos_incidence / (4.0 * kPi * r2);
        }
    }
    return stats.reference_gain / std::pow(stats.distance, stats.path_loss_exponent) * sum;
}

double sinr_direct(const CVec& w, const CVec& g, const CVec& f, const RVec& rho, const SystemParams& p) {
    const CMat L = rho.cwiseSqrt().cast<cplx>().asDiagonal();
    const cplx s = (w.adjoint() * L * g)(0);
    const cplx i = (w.adjoint() * L * f)(0);
    const double den = p.interference_power * std::norm(i) + p.antenna_noise * (L * w).squaredNorm() +
                       p.id_noise * w.squaredNorm();
    return p.transmit_power * std::norm(s) / den;
}

double mmse_sinr_dense(const CVec& g, const CVec& f, const RVec& rho, const SystemParams& p) {
    const auto m = g.size();
    const CMat L = rho.cwiseSqrt().cast<cplx>().asDiagonal();
    const CMat K = p.interference_power * L * f * f.adjoint() * L + p.antenna_noise * L * L +
                   p.id_noise * CMat::Identity(m, m);
    const CVec gh = L * g;
    return p.transmit_power * (gh.adjoint() * K.inverse() * gh)(0).real();
}

double harvested_direct(const CVec& g, const CVec& f, const RVec& rho, const SystemParams& p) {
    double q = 0.0;
    for (Eigen::Index m = 0; m < g.size(); ++m) {
        const double in = p.transmit_power * std::norm(g(m)) + p.interference_power * std::norm(f(m)) + p.antenna_noise;
        q += (1.0 - rho(m)) * in;
    }
    return p.harvest_efficiency * q;
}

RVec fd_gradient(const std::function<double(const RVec&)>& fn, const RVec& x, double h) {
    RVec grad(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) {
        RVec xp = x;
        RVec xm = x;
        xp(k) += h;
        xm(k) -= h;
        grad(k) = (fn(xp) - fn(xm)) / (2.0 * h);
    }
    return grad;
}

double scalar_ps_closed_form(double gain_sq, const SystemParams& p) {
    return p.sinr_threshold * p.id_noise / (p.transmit_power * gain_sq - p.sinr_threshold * p.antenna_noise);
}

namespace {

RVec stationary_rho(const CVec& g, const CVec& f, const SystemParams& p, double lambda) {
    const auto m = g.size();
    RVec c(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        c(k) = p.harvest_efficiency *
               (p.transmit_power * std::norm(g(k)) + p.interference_power * std::norm(f(k)) + p.antenna_noise);
    }
    auto sinr_of = [&](const RVec& r) { return mmse_sinr_dense(g, f, r.cwiseMax(0.0), p); };
    RVec rho = RVec::Constant(m, 0.5);
    for (int it = 0; it < 400; ++it) {
        // Keep the stencil inside [0, 1] so the gradient is one-sided at the bounds.
        const double h = 1e-6;
        RVec probe = rho.cwiseMax(h).cwiseMin(1.0 - h);
        const RVec grad = fd_gradient(sinr_of, probe, h);
        RVec next(m);
        for (Eigen::Index k = 0; k < m; ++k) {
            const double ratio = std::max(0.0, lambda * grad(k) / c(k));
            next(k) = std::clamp(std::max(rho(k), 1e-12) * std::sqrt(ratio), 0.0, 1.0);
        }
        const double diff = (next - rho).cwiseAbs().maxCoeff();
        rho = next;
        if (diff < 1e-11) break;
    }
    return rho;
}

}  // namespace

PsOracle ps_lambda_bisection(const CVec& g, const CVec& f, const SystemParams& p) {
    PsOracle out;
    const auto m = g.size();
    if (mmse_sinr_dense(g, f, RVec::Ones(m), p) < p.sinr_threshold) return out;
    double lo = 0.0;
    double hi = 1e-6;
    while (mmse_sinr_dense(g, f, stationary_rho(g, f, p, hi), p) < p.sinr_threshold) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) return out;
    }
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mmse_sinr_dense(g, f, stationary_rho(g, f, p, mid), p) < p.sinr_threshold) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-12 * hi) break;
    }
    out.lambda = hi;
    out.rho = stationary_rho(g, f, p, hi);
    out.sinr = mmse_sinr_dense(g, f, out.rho, p);
    out.harvested_power = harvested_direct(g, f, out.rho, p);
    out.feasible = true;
    return out;
}

KnapsackOracle knapsack_grid(const RVec& c, const RVec& a, double b, double step) {
    const auto m = c.size();
    const int levels = static_cast<int>(std::lround(1.0 / step));
    KnapsackOracle best;
    best.objective = -std::numeric_limits<double>::infinity();
    for (Eigen::Index free = 0; free < m; ++free) {
        std::vector<int> idx(static_cast<std::size_t>(m - 1), 0);
        while (true) {
            RVec rho = RVec::Zero(m);
            Eigen::Index pos = 0;
            for (Eigen::Index k = 0; k < m; ++k) {
                if (k == free) continue;
                rho(k) = idx[static_cast<std::size_t>(pos++)] * step;
            }
            const double have = rho.dot(a);
            double need = b - have;
            bool ok = true;
            if (need > 0.0) {
                if (a(free) <= 0.0 || need > a(free)) {
                    ok = false;
                } else {
                    rho(free) = need / a(free);
                }
            }
            if (ok) {
                const double obj = (RVec::Ones(m) - rho).dot(c);
                if (obj > best.objective) {
                    best.objective = obj;
                    best.rho = rho;
                    best.feasible = true;
                }
            }
            // Odometer over the grid coordinates.
            std::size_t d = 0;
            while (d < idx.size() && ++idx[d] > levels) idx[d++] = 0;
            if (d == idx.size()) break;
        }
    }
    return best;
}

PhaseGridOracle phase_grid(const PhaseSubproblem& sub, int levels) {
    const auto n = sub.mats.omega.rows();
    PhaseGridOracle best;
    best.objective = -std::numeric_limits<double>::infinity();
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    CVec u(n);
    while (true) {
        for (Eigen::Index k = 0; k < n; ++k) u(k) = std::polar(1.0, kTwoPi * idx[static_cast<std::size_t>(k)] / levels);
        if (sub.signal_power(u) >= sub.sinr_rhs) {
            const double q = sub.objective(u);
            if (q > best.objective) {
                best.objective = q;
                best.u = u;
                best.feasible = true;
            }
        }
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] >= levels) idx[d++] = 0;
        if (d == idx.size()) break;
    }
    return best;
}

double harvested_at_phases(const ChannelSet& set, const CVec& u, const RVec& rho, const SystemParams& p) {
    const auto na = set.h_a.size();
    CVec g = CVec::Zero(set.antennas());
    for (Eigen::Index k = 0; k < na; ++k) g += set.G_a.col(k) * u(k) * set.h_a(k);
    for (Eigen::Index k = 0; k < set.h_b.size(); ++k) g += set.G_b.col(k) * u(na + k) * set.h_b(k);
    return harvested_direct(g, set.f, rho, p);
}

}  // namespace swipt::oracle
