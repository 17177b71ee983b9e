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

#include "swipt/receiver.hpp"

#include <stdexcept>

namespace swipt {

void SystemParams::validate() const {
    if (!(transmit_power > 0.0 && interference_power > 0.0 && antenna_noise > 0.0 && id_noise > 0.0)) {
        throw std::invalid_argument("all powers must be positive");
    }
    if (!(harvest_efficiency > 0.0 && harvest_efficiency <= 1.0)) {
        throw std::invalid_argument("harvest efficiency must lie in (0, 1]");
    }
    if (!(sinr_threshold > 0.0)) throw std::invalid_argument("SINR threshold must be positive");
}

PsVector PsVector::uniform(Eigen::Index antennas, double value) {
    PsVector ps{RVec::Constant(antennas, value)};
    ps.validate();
    return ps;
}

void PsVector::validate() const {
    for (Eigen::Index m = 0; m < rho.size(); ++m) {
        if (!(rho(m) >= 0.0 && rho(m) <= 1.0)) throw std::invalid_argument("PS ratio outside [0, 1]");
    }
}

namespace {

void check_sizes(const CVec& g, const CVec& f, const PsVector& ps) {
    if (g.size() != f.size() || g.size() != ps.size()) throw std::invalid_argument("antenna count mismatch");
}

}  // namespace

CVec apply_s_inverse(const CVec& x, const CVec& f, const PsVector& ps, const SystemParams& params) {
    const RVec d = (params.antenna_noise * ps.rho).array() + params.id_noise;
    const CVec q = std::sqrt(params.interference_power) * ps.sqrt_rho().cwiseProduct(f);
    const CVec dinv_x = x.cwiseQuotient(d.cast<cplx>());
    const CVec dinv_q = q.cwiseQuotient(d.cast<cplx>());
    const cplx num = q.dot(dinv_x);  // q^H D^{-1} x
    const double den = 1.0 + q.dot(dinv_q).real();
    return dinv_x - dinv_q * (num / den);
}

CMat covariance_s(const CVec& f, const PsVector& ps, const SystemParams& params) {
    const CVec q = ps.sqrt_rho().cast<cplx>().cwiseProduct(f);
    CMat s = params.interference_power * q * q.adjoint();
    for (Eigen::Index m = 0; m < f.size(); ++m) s(m, m) += params.antenna_noise * ps.rho(m) + params.id_noise;
    return s;
}

CVec mmse_beamformer(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params) {
    check_sizes(g, f, ps);
    return apply_s_inverse(ps.sqrt_rho().cast<cplx>().cwiseProduct(g), f, ps, params);
}

double sinr(const CVec& w, const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params) {
    check_sizes(g, f, ps);
    if (w.size() != g.size()) throw std::invalid_argument("beamformer size mismatch");
    if (w.squaredNorm() == 0.0) throw std::invalid_argument("zero beamformer");
    const CVec wl = ps.sqrt_rho().cast<cplx>().cwiseProduct(w);  // (w^H L^{1/2})^H
    const double signal = params.transmit_power * std::norm(wl.dot(g));
    const double interference = params.interference_power * std::norm(wl.dot(f));
    const double noise = params.antenna_noise * wl.squaredNorm() + params.id_noise * w.squaredNorm();
    return signal / (interference + noise);
}

double mmse_sinr(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params) {
    check_sizes(g, f, ps);
    const CVec lg = ps.sqrt_rho().cast<cplx>().cwiseProduct(g);
    return params.transmit_power * lg.dot(apply_s_inverse(lg, f, ps, params)).real();
}

RVec mmse_sinr_gradient(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params) {
    check_sizes(g, f, ps);
    // (D + a b^H) v = g with D = diag(sigma^2 rho + delta^2), a = P_in f, b = L f.
    const RVec d = (params.antenna_noise * ps.rho).array() + params.id_noise;
    const CVec a = params.interference_power * f;
    const CVec b = ps.rho.cast<cplx>().cwiseProduct(f);
    const CVec dinv_g = g.cwiseQuotient(d.cast<cplx>());
    const CVec dinv_a = a.cwiseQuotient(d.cast<cplx>());
    const cplx den = 1.0 + b.dot(dinv_a);
    const CVec v = dinv_g - dinv_a * (b.dot(dinv_g) / den);
    return params.id_noise * params.transmit_power * v.cwiseAbs2();
}

RVec received_power(const CVec& g, const CVec& f, const SystemParams& params) {
    return (params.transmit_power * g.cwiseAbs2() + params.interference_power * f.cwiseAbs2()).array() +
           params.antenna_noise;
}

double harvested_power_near(const CVec& g, const CVec& f, const PsVector& ps, const SystemParams& params) {
    check_sizes(g, f, ps);
    const RVec c = received_power(g, f, params);
    return params.harvest_efficiency * (RVec::Ones(ps.size()) - ps.rho).dot(c);
}

double hybrid_average_sinr(double gain_a, double gain_b, const CVec& f, const PsVector& ps,
                           const SystemParams& params) {
    if (f.size() != ps.size()) throw std::invalid_argument("antenna count mismatch");
    const double num = params.transmit_power * ps.rho.sum() * (gain_a + gain_b);
    const double den = params.interference_power * ps.rho.dot(f.cwiseAbs2()) +
                       params.antenna_noise * ps.rho.sum() + params.id_noise;
    return num / den;
}

double harvested_power_hybrid(double gain_a, double gain_b, const CVec& f, const PsVector& ps,
                              const SystemParams& params) {
    if (f.size() != ps.size()) throw std::invalid_argument("antenna count mismatch");
    const RVec c = (params.transmit_power * (gain_a + gain_b) + params.interference_power * f.cwiseAbs2().array() +
                    params.antenna_noise)
                       .matrix();
    return params.harvest_efficiency * (RVec::Ones(ps.size()) - ps.rho).dot(c);
}

}  // namespace swipt
