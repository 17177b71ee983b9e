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
#include <filesystem>
#include <sstream>

#include "swipt/gain_sweep.hpp"
#include "swipt/sweep.hpp"

using namespace swipt;
using Catch::Matchers::WithinRel;

TEST_CASE("config parsing with dB keys and comments", "[harness]") {
    const auto kv = parse_key_values(
        "# comment\n"
        "regime = hybrid\n"
        "antenna_noise_db = -58   # -28 dBm\n"
        "qos_ratio = 0.5\n"
        "sweep_variable = irs_ap_distance_y\n"
        "sweep_values = 0.25, 0.5, 1\n"
        "schemes = Proposed, SingleIrs\n");
    const Scenario s = scenario_from_config(kv);
    CHECK(s.regime == Regime::HybridField);
    CHECK(s.params.transmit_power == 10.0);
    CHECK_THAT(s.params.antenna_noise, WithinRel(1.5848931924611143e-06, 1e-12));
    CHECK_THAT(s.params.sinr_threshold, WithinRel(5.0, 1e-15));
    CHECK(s.sweep.variable == SweepVariable::IrsApDistanceY);
    CHECK(s.sweep.values == std::vector<double>{0.25, 0.5, 1.0});
    CHECK(s.schemes.size() == 2);
}

TEST_CASE("config errors are reported", "[harness]") {
    CHECK_THROWS_AS(parse_key_values("no equals sign\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_key_values("a = 1\na = 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("bogus = 1\n")), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("trials = 0\n")), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("sweep_variable = qos_ratio\nsweep_values = 1, 0.5\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("schemes = SingleIrs\n")), std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("regime = hybrid\nschemes = ComAlgorithm\n")),
                    std::invalid_argument);
    CHECK_THROWS_AS(scenario_from_config(parse_key_values("qos_ratio = 1\nsinr_threshold_db = 10\n")),
                    std::invalid_argument);
}

TEST_CASE("sweep cells override the swept field", "[harness]") {
    Scenario s = default_scenario(Regime::NearField);
    s.sweep.variable = SweepVariable::SinrThresholdDb;
    CHECK_THAT(scenario_at(s, 10.0).params.sinr_threshold, WithinRel(10.0, 1e-14));
    s.sweep.variable = SweepVariable::ElementsX;
    CHECK(scenario_at(s, 7.0).elements_x == 7);
    s.sweep.variable = SweepVariable::IrsApDistanceX;
    CHECK(scenario_at(s, 2.0).geometry_at(s.user_center).irs2.center.x == 2.0);
}

TEST_CASE("realisations depend only on seed, trial and cell", "[harness]") {
    Scenario s = default_scenario(Regime::NearField);
    s.elements_x = s.elements_z = 3;
    const TrialRealization a = realize_trial(s, 4, 1);
    const TrialRealization b = realize_trial(s, 4, 1);
    const TrialRealization c = realize_trial(s, 5, 1);
    CHECK(a.channels.f == b.channels.f);
    CHECK(a.channels.G_a == b.channels.G_a);
    CHECK_FALSE(a.channels.f == c.channels.f);
    const double r = norm(a.user_centroid - s.user_center);
    CHECK(r <= s.user_radius);
    CHECK(a.user_centroid.y == s.user_center.y);
}

TEST_CASE("hybrid schemes share one realisation and keep their ordering", "[harness]") {
    Scenario s = default_scenario(Regime::HybridField);
    s.trials = 30;
    const auto rows = run_sweep(s);
    REQUIRE(rows.size() == 30 * s.schemes.size());
    for (std::size_t i = 0; i < rows.size(); i += s.schemes.size()) {
        const ResultRow& prop = rows[i];
        REQUIRE(prop.scheme == SchemeId::Proposed);
        for (std::size_t j = 1; j < s.schemes.size(); ++j) {
            const ResultRow& other = rows[i + j];
            CHECK(other.trial == prop.trial);
            if (other.status != SolveStatus::Infeasible && prop.status != SolveStatus::Infeasible) {
                CHECK(prop.harvested_power_w >= other.harvested_power_w * (1.0 - 1e-12));
            }
        }
    }
}

TEST_CASE("summary excludes infeasible rows and flags cells", "[harness]") {
    std::vector<ResultRow> rows(4);
    for (int i = 0; i < 4; ++i) {
        rows[i].trial = i;
        rows[i].status = SolveStatus::Converged;
        rows[i].harvested_power_w = 1.0 + i;
    }
    rows[3].status = SolveStatus::Infeasible;
    rows[2].status = SolveStatus::Infeasible;
    rows[1].status = SolveStatus::Infeasible;
    const auto cells = summarize(rows);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].infeasible == 3);
    CHECK(cells[0].mean_harvested_power_w == 1.0);
    CHECK(cells[0].flagged);
}

TEST_CASE("CSV layout and number format", "[harness]") {
    ResultRow r;
    r.scheme = SchemeId::EqualPS;
    r.sweep_variable = SweepVariable::QosRatio;
    r.sweep_value = 0.1;
    r.trial = 3;
    r.harvested_power_w = 1.0 / 3.0;
    r.sinr_linear = 10.0;
    r.status = SolveStatus::Converged;
    std::ostringstream out;
    write_csv(out, {r});
    CHECK(out.str() ==
          "scheme,sweep_variable,sweep_value,trial,harvested_power_w,sinr_linear,status,wall_ms\n"
          "EqualPS,qos_ratio,0.1,3,0.333333333333,10,Converged,0\n");
}

TEST_CASE("near-field sweep is independent of the job count", "[harness]") {
    Scenario s = default_scenario(Regime::NearField);
    s.elements_x = s.elements_z = 3;
    s.params.sinr_threshold = 1.0;
    s.trials = 2;
    s.sweep = {SweepVariable::QosRatio, {0.05, 0.1}};
    std::ostringstream a, b;
    write_csv(a, run_sweep(s));
    SweepOptions two;
    two.jobs = 2;
    write_csv(b, run_sweep(s, two));
    CHECK(a.str() == b.str());
}

TEST_CASE("gain sweep: free space keeps growing while the exact sum levels off", "[harness]") {
    const FarFieldStats stats;
    const PanelGrid g{10, 10, 0.2, 0.04, 1.0, 1.0};
    const auto rows = gain_sweep(g, stats, GainAxis::X, {50, 100, 200});
    const double exact_growth = rows[2].gains.exact_sum / rows[1].gains.exact_sum;
    const double free_growth = rows[2].free_space / rows[1].free_space;
    CHECK(exact_growth < 1.01);
    CHECK(free_growth - 1.0 > 5.0 * (exact_growth - 1.0));
    for (const auto& r : rows) {
        CHECK(r.gains.exact_sum <= r.gains.mirror_bound);
        CHECK(r.gains.condition == AsymptoticCondition::A);
    }
    const auto zrows = gain_sweep(g, stats, GainAxis::Z, {200});
    CHECK(zrows[0].gains.condition == AsymptoticCondition::B);
    CHECK_THAT(zrows[0].gains.exact_sum, WithinRel(*zrows[0].gains.asymptotic, 0.02));
}

TEST_CASE("shipped configs load and validate", "[harness]") {
    int loaded = 0;
    for (const auto& entry : std::filesystem::directory_iterator(SWIPT_CONFIG_DIR)) {
        if (entry.path().extension() != ".cfg") continue;
        INFO(entry.path().string());
        const Scenario s = load_scenario(entry.path().string());
        CHECK(s.sweep.values.size() >= 4);
        ++loaded;
    }
    CHECK(loaded >= 6);
}
