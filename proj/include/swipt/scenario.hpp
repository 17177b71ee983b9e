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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swipt/alternating.hpp"
#include "swipt/channel.hpp"
#include "swipt/geometry.hpp"
#include "swipt/receiver.hpp"

namespace swipt {

enum class SchemeId { Proposed, EqualPS, RandomPhase, RandomPS, ComAlgorithm, SingleIrs };

const char* to_string(SchemeId s);
SchemeId parse_scheme(const std::string& name);

enum class SweepVariable {
    None,
    QosRatio,
    SinrThresholdDb,
    InterferencePower,
    IrsApDistanceX,
    IrsApDistanceY,
    ElementsX,
    ElementsZ,
};

const char* to_string(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);

struct SweepSpec {
    SweepVariable variable = SweepVariable::None;
    std::vector<double> values;
};

/// Everything one Monte Carlo experiment needs. Panels sit at (x, +y, 0) and
/// (x, -y, 0); the user centroid is drawn uniformly from a disk in the x-z
/// plane around user_center.
struct Scenario {
    Regime regime = Regime::NearField;
    double wavelength = 0.4;
    double irs_x = 1.0;
    double irs_y = 1.0;
    int elements_x = 11;
    int elements_z = 11;
    double element_spacing = 0.2;
    double element_area = 0.04;
    int antenna_count = 5;
    double antenna_spacing = 0.2;
    Vec3 user_center{8.0, 0.0, -2.0};
    double user_radius = 1.0;
    Vec3 interferer{100.0, 100.0, 0.0};
    double interference_gain = 0.01;     // path gain at 1 m
    double interference_exponent = 2.0;
    double qos_base = 10.0;              // gamma_0 = qos_ratio * qos_base
    SystemParams params;
    FarFieldStats far_a;
    FarFieldStats far_b;
    SweepSpec sweep;
    int trials = 50;
    std::uint64_t master_seed = 1;
    std::vector<SchemeId> schemes;
    AoConfig ao;

    void validate() const;
    SystemGeometry geometry_at(Vec3 user_centroid) const;
};

Scenario default_scenario(Regime regime);

/// Parses `key = value` lines with `#` comments. Duplicate keys are errors.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Applies a parsed config on top of the regime defaults. A key ending in
/// `_db` is converted to linear and stored under the key without the suffix.
Scenario scenario_from_config(const std::map<std::string, std::string>& kv);
Scenario load_scenario(const std::string& path);

/// Copy of `base` with the sweep variable set to `value`.
Scenario scenario_at(const Scenario& base, double value);

}  // namespace swipt
