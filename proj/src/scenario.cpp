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

#include "swipt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace swipt {

namespace {

constexpr SchemeId kAllSchemes[] = {SchemeId::Proposed,  SchemeId::EqualPS,      SchemeId::RandomPhase,
                                    SchemeId::RandomPS,  SchemeId::ComAlgorithm, SchemeId::SingleIrs};

constexpr SweepVariable kAllSweeps[] = {SweepVariable::None,           SweepVariable::QosRatio,
                                        SweepVariable::SinrThresholdDb, SweepVariable::InterferencePower,
                                        SweepVariable::IrsApDistanceX,  SweepVariable::IrsApDistanceY,
                                        SweepVariable::ElementsX,       SweepVariable::ElementsZ};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double d = 0.0;
    try {
        d = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not a number: " + v);
    }
    if (pos != v.size() || !std::isfinite(d)) throw std::invalid_argument("config key '" + key + "': bad number: " + v);
    return d;
}

int to_int(const std::string& key, const std::string& v) {
    const double d = to_double(key, v);
    if (d != std::floor(d) || std::abs(d) > 1e9) throw std::invalid_argument("config key '" + key + "': not an integer");
    return static_cast<int>(d);
}

std::uint64_t to_u64(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    unsigned long long u = 0;
    try {
        u = std::stoull(v, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "': not an unsigned integer: " + v);
    }
    if (pos != v.size() || v.front() == '-') throw std::invalid_argument("config key '" + key + "': bad integer");
    return u;
}

std::string exact(double d) {
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
}

Regime parse_regime(const std::string& v) {
    if (v == "near" || v == "near_field") return Regime::NearField;
    if (v == "hybrid" || v == "hybrid_field") return Regime::HybridField;
    throw std::invalid_argument("unknown regime: " + v);
}

}  // namespace

const char* to_string(SchemeId s) {
    switch (s) {
        case SchemeId::Proposed: return "Proposed";
        case SchemeId::EqualPS: return "EqualPS";
        case SchemeId::RandomPhase: return "RandomPhase";
        case SchemeId::RandomPS: return "RandomPS";
        case SchemeId::ComAlgorithm: return "ComAlgorithm";
        case SchemeId::SingleIrs: return "SingleIrs";
    }
    return "Unknown";
}

SchemeId parse_scheme(const std::string& name) {
    for (const SchemeId s : kAllSchemes) {
        if (name == to_string(s)) return s;
    }
    throw std::invalid_argument("unknown scheme: " + name);
}

const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::None: return "none";
        case SweepVariable::QosRatio: return "qos_ratio";
        case SweepVariable::SinrThresholdDb: return "sinr_threshold_db";
        case SweepVariable::InterferencePower: return "interference_power";
        case SweepVariable::IrsApDistanceX: return "irs_ap_distance_x";
        case SweepVariable::IrsApDistanceY: return "irs_ap_distance_y";
        case SweepVariable::ElementsX: return "elements_x";
        case SweepVariable::ElementsZ: return "elements_z";
    }
    return "unknown";
}

SweepVariable parse_sweep_variable(const std::string& name) {
    for (const SweepVariable v : kAllSweeps) {
        if (name == to_string(v)) return v;
    }
    throw std::invalid_argument("unknown sweep variable: " + name);
}

void Scenario::validate() const {
    if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
    if (!(irs_x > 0.0) || !(irs_y > 0.0)) throw std::invalid_argument("IRS offsets must be positive");
    if (!(user_radius >= 0.0)) throw std::invalid_argument("user radius must be non-negative");
    if (!(interference_gain > 0.0) || !(interference_exponent >= 0.0)) {
        throw std::invalid_argument("interference path parameters invalid");
    }
    if (!(qos_base > 0.0)) throw std::invalid_argument("qos_base must be positive");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (schemes.empty()) throw std::invalid_argument("no schemes selected");
    params.validate();
    far_a.validate();
    far_b.validate();
    for (const SchemeId s : schemes) {
        if (s == SchemeId::SingleIrs && regime != Regime::HybridField) {
            throw std::invalid_argument("SingleIrs is defined for the hybrid-field regime only");
        }
        if ((s == SchemeId::RandomPhase || s == SchemeId::ComAlgorithm) && regime != Regime::NearField) {
            throw std::invalid_argument(std::string(to_string(s)) + " is defined for the near-field regime only");
        }
    }
    if (sweep.variable == SweepVariable::None && !sweep.values.empty()) {
        throw std::invalid_argument("sweep values given without a sweep variable");
    }
    if (sweep.variable != SweepVariable::None && sweep.values.empty()) {
        throw std::invalid_argument("sweep variable given without values");
    }
    for (std::size_t i = 1; i < sweep.values.size(); ++i) {
        if (!(sweep.values[i] > sweep.values[i - 1])) throw std::invalid_argument("sweep values must be strictly increasing");
    }
    // Every cell must describe a valid system.
    const std::vector<double> cells = sweep.values.empty() ? std::vector<double>{0.0} : sweep.values;
    for (const double v : cells) {
        const Scenario s = sweep.variable == SweepVariable::None ? *this : scenario_at(*this, v);
        s.params.validate();
        const SystemGeometry g = s.geometry_at(s.user_center);
        g.validate();
        if (s.regime == Regime::NearField) {
            build_near_field_channels(g, s.wavelength, CVec::Zero(s.antenna_count));
        }
        if (s.user_radius > 0.0) {
            for (const double dz : {-s.user_radius, s.user_radius}) {
                s.geometry_at(s.user_center + Vec3{0.0, 0.0, dz}).validate();
            }
        }
    }
}

SystemGeometry Scenario::geometry_at(Vec3 user_centroid) const {
    SystemGeometry g;
    g.irs1 = make_panel({irs_x, irs_y, 0.0}, elements_x, elements_z, element_spacing, element_area);
    g.irs2 = make_panel({irs_x, -irs_y, 0.0}, elements_x, elements_z, element_spacing, element_area);
    g.user = user_array_centered_at(user_centroid, antenna_count, antenna_spacing);
    return g;
}

Scenario default_scenario(Regime regime) {
    Scenario s;
    s.regime = regime;
    if (regime == Regime::NearField) {
        s.params.transmit_power = 1.0;
        s.trials = 50;
        s.schemes = {SchemeId::Proposed, SchemeId::EqualPS, SchemeId::RandomPhase, SchemeId::RandomPS,
                     SchemeId::ComAlgorithm};
    } else {
        s.params.transmit_power = 10.0;
        s.trials = 200;
        s.schemes = {SchemeId::Proposed, SchemeId::EqualPS, SchemeId::RandomPS, SchemeId::SingleIrs};
    }
    s.params.sinr_threshold = s.qos_base;
    return s;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": missing '='");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key or value");
        }
        if (!kv.emplace(key, value).second) throw std::invalid_argument("duplicate config key: " + key);
    }
    return kv;
}

Scenario scenario_from_config(const std::map<std::string, std::string>& raw) {
    Regime regime = Regime::NearField;
    if (auto it = raw.find("regime"); it != raw.end()) regime = parse_regime(it->second);
    Scenario s = default_scenario(regime);

    // Normalise dB keys; the sweep value list keeps its own units.
    std::map<std::string, std::string> kv;
    for (const auto& [key, value] : raw) {
        const bool is_db = key.size() > 3 && key.compare(key.size() - 3, 3, "_db") == 0 &&
                           key != "sinr_threshold_db";
        if (is_db) {
            const std::string base = key.substr(0, key.size() - 3);
            if (raw.count(base)) throw std::invalid_argument("both " + key + " and " + base + " given");
            kv[base] = exact(db_to_linear(to_double(key, value)));
        } else {
            kv[key] = value;
        }
    }
    if (kv.count("sinr_threshold_db")) {
        if (kv.count("sinr_threshold") || kv.count("qos_ratio")) {
            throw std::invalid_argument("give only one of sinr_threshold, sinr_threshold_db, qos_ratio");
        }
        kv["sinr_threshold"] = exact(db_to_linear(to_double("sinr_threshold_db", kv["sinr_threshold_db"])));
        kv.erase("sinr_threshold_db");
    }
    if (kv.count("sinr_threshold") && kv.count("qos_ratio")) {
        throw std::invalid_argument("give only one of sinr_threshold, qos_ratio");
    }

    std::set<std::string> used;
    auto take = [&](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        if (it == kv.end()) return nullptr;
        used.insert(key);
        return &it->second;
    };
    auto num = [&](const std::string& key, double& dst) {
        if (const auto* v = take(key)) dst = to_double(key, *v);
    };
    auto integer = [&](const std::string& key, int& dst) {
        if (const auto* v = take(key)) dst = to_int(key, *v);
    };

    take("regime");
    num("wavelength", s.wavelength);
    num("irs_ap_distance_x", s.irs_x);
    num("irs_ap_distance_y", s.irs_y);
    integer("elements_x", s.elements_x);
    integer("elements_z", s.elements_z);
    num("element_spacing", s.element_spacing);
    if (kv.count("element_spacing") && !kv.count("element_area")) s.element_area = s.element_spacing * s.element_spacing;
    num("element_area", s.element_area);
    integer("antenna_count", s.antenna_count);
    num("antenna_spacing", s.antenna_spacing);
    num("user_center_x", s.user_center.x);
    num("user_center_y", s.user_center.y);
    num("user_center_z", s.user_center.z);
    num("user_radius", s.user_radius);
    num("interferer_x", s.interferer.x);
    num("interferer_y", s.interferer.y);
    num("interferer_z", s.interferer.z);
    num("interference_gain", s.interference_gain);
    num("interference_exponent", s.interference_exponent);
    num("transmit_power", s.params.transmit_power);
    num("interference_power", s.params.interference_power);
    num("antenna_noise", s.params.antenna_noise);
    num("id_noise", s.params.id_noise);
    num("harvest_efficiency", s.params.harvest_efficiency);
    num("qos_base", s.qos_base);
    s.params.sinr_threshold = s.qos_base;
    num("sinr_threshold", s.params.sinr_threshold);
    if (const auto* v = take("qos_ratio")) s.params.sinr_threshold = to_double("qos_ratio", *v) * s.qos_base;
    num("far_path_loss_exponent", s.far_a.path_loss_exponent);
    num("far_reference_gain", s.far_a.reference_gain);
    num("far_distance", s.far_a.distance);
    s.far_b = s.far_a;
    integer("trials", s.trials);
    if (const auto* v = take("seed")) s.master_seed = to_u64("seed", *v);
    if (const auto* v = take("schemes")) {
        s.schemes.clear();
        for (const auto& name : split_list(*v)) s.schemes.push_back(parse_scheme(name));
    }
    if (const auto* v = take("sweep_variable")) s.sweep.variable = parse_sweep_variable(*v);
    if (const auto* v = take("sweep_values")) {
        for (const auto& item : split_list(*v)) s.sweep.values.push_back(to_double("sweep_values", item));
    }
    integer("ao_max_outer_iters", s.ao.max_outer_iters);
    num("ao_convergence_threshold", s.ao.convergence_threshold);
    integer("randomizations", s.ao.randomizations);
    integer("dc_max_iters", s.ao.penalty.max_dc_iters);
    num("dc_growth", s.ao.penalty.growth);

    for (const auto& [key, value] : kv) {
        if (!used.count(key)) throw std::invalid_argument("unknown config key: " + key);
    }
    s.validate();
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return scenario_from_config(parse_key_values(buf.str()));
}

Scenario scenario_at(const Scenario& base, double value) {
    Scenario s = base;
    auto as_count = [](double v) {
        if (v != std::floor(v) || v < 1.0) throw std::invalid_argument("element count sweep values must be positive integers");
        return static_cast<int>(v);
    };
    switch (base.sweep.variable) {
        case SweepVariable::None: break;
        case SweepVariable::QosRatio: s.params.sinr_threshold = value * base.qos_base; break;
        case SweepVariable::SinrThresholdDb: s.params.sinr_threshold = db_to_linear(value); break;
        case SweepVariable::InterferencePower: s.params.interference_power = value; break;
        case SweepVariable::IrsApDistanceX: s.irs_x = value; break;
        case SweepVariable::IrsApDistanceY: s.irs_y = value; break;
        case SweepVariable::ElementsX: s.elements_x = as_count(value); break;
        case SweepVariable::ElementsZ: s.elements_z = as_count(value); break;
    }
    return s;
}

}  // namespace swipt
