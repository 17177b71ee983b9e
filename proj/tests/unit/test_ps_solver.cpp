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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "../oracles/oracles.hpp"
#include "swipt/alternating.hpp"
#include "swipt/ps_solver.hpp"

using namespace swipt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ChannelSet desk_channels(Rng& rng) {
    SystemGeometry g;
    g.irs1 = make_panel({1.0, 1.0, 0.0}, 5, 5, 0.2, 0.04);
    g.irs2 = make_panel({1.0, -1.0, 0.0}, 5, 5, 0.2, 0.04);
    const double ang = rng.uniform(0.0, kTwoPi);
    const Vec3 c{8.0 + 0.8 * std::cos(ang), 0.0, -2.0 + 0.8 * std::sin(ang)};
    g.user = user_array_centered_at(c, 5, 0.2);
    CVec f(5);
    for (int m = 0; m < 5; ++m) f(m) = rng.complex_gaussian(1e-6);
    return build_near_field_channels(g, 0.4, f);
}

}  // namespace

TEST_CASE("zero multiplier sends every antenna to harvesting", "[ps_solver]") {
    Rng rng(derive_seed(10, 0, 0, StreamTag::Test));
    const ChannelSet set = desk_channels(rng);
    const CVec g = combined_channel(set, co_phasing_init(set));
    const PsVector next = ps_fixed_point_step(PsVector::uniform(5, 0.5), g, set.f, SystemParams{}, 0.0);
    CHECK(next.rho.isZero());
}

TEST_CASE("fixed point satisfies the clamped stationarity condition", "[ps_solver]") {
    Rng rng(derive_seed(11, 0, 0, StreamTag::Test));
    const SystemParams p;
    const ChannelSet set = desk_channels(rng);
    const CVec g = combined_channel(set, co_phasing_init(set));
    const RVec c = p.harvest_efficiency * received_power(g, set.f, p);
    for (const double lambda : {1e-6, 1e-5, 1e-4}) {
        const FpiResult fp = ps_fixed_point(g, set.f, p, lambda, {});
        REQUIRE(fp.converged);
        const RVec grad = oracle::fd_gradient(
            [&](const RVec& r) { return oracle::mmse_sinr_dense(g, set.f, r, p); },
            fp.ps.rho.cwiseMax(1e-6).cwiseMin(1.0 - 1e-6), 1e-7);
        for (int m = 0; m < 5; ++m) {
            const double rho = fp.ps.rho(m);
            const double kkt = lambda * grad(m) - c(m);  // d(Lagrangian)/d(rho_m)
            if (rho > 1e-6 && rho < 1.0 - 1e-6) {
                CHECK(std::abs(kkt) <= 1e-4 * c(m));
            } else if (rho >= 1.0 - 1e-6) {
                CHECK(kkt >= -1e-4 * c(m));
            }
        }
    }
}

TEST_CASE("converged PS solution makes the SINR constraint tight", "[ps_solver]") {
    Rng rng(derive_seed(12, 0, 0, StreamTag::Test));
    int solved = 0;
    for (int t = 0; t < 20; ++t) {
        const ChannelSet set = desk_channels(rng);
        const CVec g = combined_channel(set, co_phasing_init(set));
        SystemParams p;
        p.sinr_threshold = rng.uniform(2.0, 10.0);
        const PsSolution s = solve_ps_subproblem(g, set.f, p, {}, {});
        if (s.status == SolveStatus::Infeasible) continue;
        ++solved;
        CHECK(s.status == SolveStatus::Converged);
        CHECK(s.lambda > 0.0);
        CHECK(std::abs(s.sinr - p.sinr_threshold) <= 1e-3 * p.sinr_threshold);
        CHECK((s.ps.rho.array() >= 0.0).all());
        CHECK((s.ps.rho.array() <= 1.0).all());
        const PsSolution eq = solve_equal_ps(g, set.f, p);
        REQUIRE(eq.status != SolveStatus::Infeasible);
        CHECK(s.harvested_power >= eq.harvested_power * (1.0 - 1e-9));
    }
    CHECK(solved >= 10);
}

TEST_CASE("multiplier search agrees with lambda bisection", "[ps_solver]") {
    Rng rng(derive_seed(13, 0, 0, StreamTag::Test));
    for (int t = 0; t < 5; ++t) {
        const ChannelSet set = desk_channels(rng);
        const CVec g = combined_channel(set, co_phasing_init(set));
        SystemParams p;
        p.sinr_threshold = rng.uniform(3.0, 10.0);
        const PsSolution s = solve_ps_subproblem(g, set.f, p, {}, {});
        REQUIRE(s.status == SolveStatus::Converged);
        const oracle::PsOracle ref = oracle::ps_lambda_bisection(g, set.f, p);
        REQUIRE(ref.feasible);
        CHECK_THAT(s.harvested_power, WithinRel(ref.harvested_power, 1e-3));
        CHECK_THAT(s.lambda, WithinRel(ref.lambda, 2e-2));
    }
}

TEST_CASE("single antenna without interference has a closed form", "[ps_solver]") {
    SystemParams p;
    p.sinr_threshold = 5.0;
    CVec g(1);
    g(0) = cplx(0.01, 0.005);
    const double expect = oracle::scalar_ps_closed_form(std::norm(g(0)), p);
    REQUIRE(expect > 0.0);
    REQUIRE(expect < 1.0);
    MultiplierConfig tight;
    tight.tolerance = 1e-9;
    const PsSolution s = solve_ps_subproblem(g, CVec::Zero(1), p, {}, tight);
    CHECK_THAT(s.ps.rho(0), WithinRel(expect, 1e-6));
    const PsSolution eq = solve_equal_ps(g, CVec::Zero(1), p);
    CHECK_THAT(eq.ps.rho(0), WithinRel(expect, 1e-6));
}

TEST_CASE("infeasible instances are reported, not solved", "[ps_solver]") {
    SystemParams p;
    p.sinr_threshold = 1e6;
    CVec g(2);
    g << cplx(1e-3, 0.0), cplx(0.0, 1e-3);
    const PsSolution s = solve_ps_subproblem(g, CVec::Zero(2), p, {}, {});
    CHECK(s.status == SolveStatus::Infeasible);
    CHECK(solve_equal_ps(g, CVec::Zero(2), p).status == SolveStatus::Infeasible);
}
