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
#include "swipt/hybridfield.hpp"

using namespace swipt;
using Catch::Matchers::WithinRel;

TEST_CASE("closed form tracks the exact sum for small xi", "[hybridfield]") {
    const FarFieldStats stats;
    for (const int n : {5, 11, 21}) {
        for (const double rb : {0.5, 1.0, 2.0}) {
            const PanelGrid g{n, n, 0.01, 1e-4, 1.0, rb};
            const auto cf = closed_form_gain(g, stats);
            CHECK(cf.in_validity_regime);
            CHECK_THAT(cf.value, WithinRel(hybrid_gain_numeric(g, stats), 1e-3));
        }
    }
}

TEST_CASE("closed-form error stays small across the validity regime", "[hybridfield]") {
    const FarFieldStats stats;
    for (const double xi : {0.1, 0.05, 0.02, 0.01}) {
        const PanelGrid g{11, 11, xi, xi * xi, 1.0, 1.0};
        CHECK_THAT(closed_form_gain(g, stats).value, WithinRel(hybrid_gain_numeric(g, stats), 1e-3));
    }
}

TEST_CASE("single row approaches the exact single-row sum", "[hybridfield]") {
    const FarFieldStats stats;
    const PanelGrid g{21, 1, 0.01, 1e-4, 1.0, 1.0};
    CHECK_THAT(closed_form_gain(g, stats).value, WithinRel(hybrid_gain_numeric(g, stats), 0.02));
}

TEST_CASE("validity flag and rejected inputs", "[hybridfield]") {
    const FarFieldStats stats;
    CHECK_FALSE(closed_form_gain(PanelGrid{5, 5, 0.2, 0.04, 1.0, 1.0}, stats).in_validity_regime);
    CHECK_THROWS_AS(closed_form_gain(PanelGrid{5, 5, 0.2, 0.04, 1.0, 0.0}, stats), std::invalid_argument);
    const PanelGrid near_boundary{15, 10, 0.2, 0.04, 1.0, std::sqrt(1.25)};  // boundary 15
    CHECK_THROWS_AS(asymptotic_gain(near_boundary, stats, AsymptoticCondition::B), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_gain(PanelGrid{50, 10, 0.2, 0.04, 1.0, 1.0}, stats, AsymptoticCondition::B),
                    std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_gain(PanelGrid{10, 10, 0.2, 0.04, 1.0, 1.0}, stats, AsymptoticCondition::C),
                    std::invalid_argument);
}

TEST_CASE("mirror symmetric panels have equal gains", "[hybridfield]") {
    const FarFieldStats stats;
    const auto a = make_panel({1.0, 1.0, 0.0}, 11, 11, 0.2, 0.04);
    const auto b = make_panel({1.0, -1.0, 0.0}, 11, 11, 0.2, 0.04);
    CHECK(closed_form_gain(a, stats).value == closed_form_gain(b, stats).value);
    CHECK_THAT(hybrid_gain_numeric(a, stats), WithinRel(hybrid_gain_numeric(b, stats), 1e-14));
}

TEST_CASE("mirror bound values", "[hybridfield]") {
    const FarFieldStats stats;
    CHECK_THAT(mirror_bound(stats, 0.2, 0.04), WithinRel(0.01 / (2.0 * std::pow(45.0, 1.6)), 1e-13));
    CHECK_THAT(mirror_bound(stats, 0.2, 0.02), WithinRel(0.5 * mirror_bound(stats, 0.2, 0.04), 1e-13));
    // Large panel in both directions: the limits meet the bound.
    const double bound = mirror_bound(stats, 0.2, 0.04);
    const double gap1 = bound - closed_form_gain(PanelGrid{1000, 1000, 0.2, 0.04, 1.0, 1.0}, stats).value;
    const double gap4 = bound - closed_form_gain(PanelGrid{4000, 4000, 0.2, 0.04, 1.0, 1.0}, stats).value;
    CHECK(gap4 > 0.0);
    CHECK(gap4 < 0.3 * gap1);
    CHECK(gap4 < 5e-3 * bound);
}

TEST_CASE("gains never exceed the mirror bound and grow with N", "[hybridfield]") {
    const FarFieldStats stats;
    const double bound = mirror_bound(stats, 0.2, 0.04);
    double prev_exact = 0.0, prev_cf = 0.0;
    for (int n = 1; n <= 120; n += 7) {
        const GainBreakdown gb = gain_breakdown(PanelGrid{n, 10, 0.2, 0.04, 1.0, 1.0}, stats);
        CHECK(gb.exact_sum <= bound * (1.0 + 1e-6));
        CHECK(gb.closed_form <= bound * (1.0 + 1e-6));
        CHECK(gb.exact_sum > prev_exact);
        CHECK(gb.closed_form > prev_cf);
        prev_exact = gb.exact_sum;
        prev_cf = gb.closed_form;
    }
}

namespace {

struct Lp {
    RVec c, a;
    double b;
};

Lp coefficients(double ga, double gb, const CVec& f, const SystemParams& p) {
    Lp lp;
    const auto m = f.size();
    lp.c.resize(m);
    lp.a.resize(m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const double fi = p.interference_power * std::norm(f(k));
        lp.c(k) = p.harvest_efficiency * (p.transmit_power * (ga + gb) + fi + p.antenna_noise);
        lp.a(k) = p.transmit_power * (ga + gb) - p.sinr_threshold * (fi + p.antenna_noise);
    }
    lp.b = p.sinr_threshold * p.id_noise;
    return lp;
}

}  // namespace

TEST_CASE("greedy PS matches the grid oracle", "[hybridfield]") {
    Rng rng(derive_seed(70, 0, 0, StreamTag::Test));
    for (int t = 0; t < 30; ++t) {
        const int m = 3;
        SystemParams p;
        p.transmit_power = 10.0;
        p.sinr_threshold = rng.uniform(1.0, 30.0);
        const double ga = rng.uniform(1e-6, 5e-6), gb = rng.uniform(1e-6, 5e-6);
        CVec f(m);
        for (int k = 0; k < m; ++k) f(k) = rng.complex_gaussian(rng.uniform(1e-7, 3e-6));
        const HybridPsSolution s = solve_hybrid_ps(ga, gb, f, p);
        const Lp lp = coefficients(ga, gb, f, p);
        const oracle::KnapsackOracle ref = oracle::knapsack_grid(lp.c, lp.a, lp.b, 0.01);
        REQUIRE(ref.feasible == (s.status != SolveStatus::Infeasible));
        if (!ref.feasible) continue;
        CHECK_THAT(s.harvested_power, WithinRel(ref.objective, 1e-9));
        CHECK(std::abs(s.ps.rho.dot(lp.a) - lp.b) <= 1e-9 * lp.b);
        CHECK(s.sinr >= p.sinr_threshold * (1.0 - 1e-9));
        const HybridPsSolution eq = solve_hybrid_equal_ps(ga, gb, f, p);
        // A common ratio also pays for antennas with negative margin.
        REQUIRE((eq.status != SolveStatus::Infeasible) == (lp.a.sum() >= lp.b));
        if (eq.status == SolveStatus::Infeasible) continue;
        CHECK(s.harvested_power >= eq.harvested_power * (1.0 - 1e-12));
        CHECK_THAT(eq.sinr, WithinRel(p.sinr_threshold, 1e-9));
    }
}

TEST_CASE("single-antenna hybrid PS closed form", "[hybridfield]") {
    SystemParams p;
    p.transmit_power = 10.0;
    const double ga = 3e-6, gb = 3e-6;
    const HybridPsSolution s = solve_hybrid_ps(ga, gb, CVec::Zero(1), p);
    const double expect = p.sinr_threshold * p.id_noise / (p.transmit_power * (ga + gb) - p.sinr_threshold * p.antenna_noise);
    REQUIRE(expect > 0.0);
    REQUIRE(expect <= 1.0);
    CHECK_THAT(s.ps.rho(0), WithinRel(expect, 1e-12));
}

TEST_CASE("identical antennas fill in index order", "[hybridfield]") {
    SystemParams p;
    p.transmit_power = 10.0;
    p.sinr_threshold = 50.0;
    const Lp lp = coefficients(2e-5, 2e-5, CVec::Zero(4), p);
    const HybridPsSolution s = solve_hybrid_ps(2e-5, 2e-5, CVec::Zero(4), p);
    REQUIRE(s.status == SolveStatus::Converged);
    CHECK_THAT(s.ps.rho(0), WithinRel(lp.b / lp.a(0), 1e-12));
    for (int k = 1; k < 4; ++k) CHECK(s.ps.rho(k) == 0.0);
}

TEST_CASE("hybrid PS infeasibility", "[hybridfield]") {
    SystemParams p;
    p.sinr_threshold = 1e4;
    const HybridPsSolution s = solve_hybrid_ps(1e-6, 1e-6, CVec::Zero(3), p);
    CHECK(s.status == SolveStatus::Infeasible);
    CHECK(solve_hybrid_equal_ps(1e-6, 1e-6, CVec::Zero(3), p).status == SolveStatus::Infeasible);
}
