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

#include "swipt/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <tuple>

namespace swipt {

namespace {

std::vector<ResultRow> run_cell_trial(const Scenario& cell, double value, std::uint64_t cell_index,
                                      std::uint64_t trial, bool timing) {
    const TrialRealization r = realize_trial(cell, trial, cell_index);
    TrialCache cache;
    std::vector<ResultRow> rows;
    for (const SchemeId s : cell.schemes) {
        const auto t0 = std::chrono::steady_clock::now();
        ResultRow row = run_scheme(s, r, cell, cache);
        const auto t1 = std::chrono::steady_clock::now();
        row.sweep_variable = cell.sweep.variable;
        row.sweep_value = value;
        row.wall_ms = timing ? std::chrono::duration<double, std::milli>(t1 - t0).count() : 0.0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

std::vector<ResultRow> run_sweep(const Scenario& scenario, const SweepOptions& options) {
    scenario.validate();
    const bool swept = scenario.sweep.variable != SweepVariable::None;
    const std::vector<double> values = swept ? scenario.sweep.values : std::vector<double>{0.0};
    std::vector<Scenario> cells;
    for (const double v : values) cells.push_back(swept ? scenario_at(scenario, v) : scenario);

    const auto trials = static_cast<std::size_t>(scenario.trials);
    const std::size_t tasks = cells.size() * trials;
    std::vector<std::vector<ResultRow>> slots(tasks);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (std::size_t i = next++; i < tasks; i = next++) {
            const std::size_t c = i / trials;
            const std::size_t t = i % trials;
            try {
                slots[i] = run_cell_trial(cells[c], values[c], c, t, options.timing);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks;
            }
        }
    };
    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<ResultRow> rows;
    rows.reserve(tasks * scenario.schemes.size());
    for (auto& slot : slots) rows.insert(rows.end(), slot.begin(), slot.end());
    return rows;
}

std::vector<CellSummary> summarize(const std::vector<ResultRow>& rows) {
    // Key keeps first-appearance order of cells and schemes.
    std::vector<CellSummary> cells;
    std::vector<std::vector<double>> values;
    std::map<std::tuple<double, int, int>, std::size_t> index;
    for (const ResultRow& r : rows) {
        const auto key = std::make_tuple(r.sweep_value, static_cast<int>(r.sweep_variable), static_cast<int>(r.scheme));
        auto it = index.find(key);
        if (it == index.end()) {
            CellSummary c;
            c.scheme = r.scheme;
            c.sweep_variable = r.sweep_variable;
            c.sweep_value = r.sweep_value;
            it = index.emplace(key, cells.size()).first;
            cells.push_back(c);
            values.emplace_back();
        }
        CellSummary& c = cells[it->second];
        ++c.trials;
        if (r.status == SolveStatus::Infeasible) {
            ++c.infeasible;
        } else {
            values[it->second].push_back(r.harvested_power_w);
        }
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& v = values[i];
        CellSummary& c = cells[i];
        c.flagged = 2 * c.infeasible > c.trials;
        if (v.empty()) {
            c.mean_harvested_power_w = std::numeric_limits<double>::quiet_NaN();
            c.std_harvested_power_w = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        double sum = 0.0;
        for (const double x : v) sum += x;
        const double mean = sum / static_cast<double>(v.size());
        double ss = 0.0;
        for (const double x : v) ss += (x - mean) * (x - mean);
        c.mean_harvested_power_w = mean;
        c.std_harvested_power_w = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
    }
    return cells;
}

std::string format_float(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << "scheme,sweep_variable,sweep_value,trial,harvested_power_w,sinr_linear,status,wall_ms\n";
    for (const ResultRow& r : rows) {
        out << to_string(r.scheme) << ',' << to_string(r.sweep_variable) << ',' << format_float(r.sweep_value) << ','
            << r.trial << ',' << format_float(r.harvested_power_w) << ',' << format_float(r.sinr_linear) << ','
            << to_string(r.status) << ',' << format_float(r.wall_ms) << '\n';
    }
}

void write_summary(std::ostream& out, const std::vector<CellSummary>& cells) {
    out << "scheme,sweep_variable,sweep_value,trials,infeasible,mean_harvested_power_w,std_harvested_power_w,flagged\n";
    for (const CellSummary& c : cells) {
        out << to_string(c.scheme) << ',' << to_string(c.sweep_variable) << ',' << format_float(c.sweep_value) << ','
            << c.trials << ',' << c.infeasible << ',' << format_float(c.mean_harvested_power_w) << ','
            << format_float(c.std_harvested_power_w) << ',' << (c.flagged ? "yes" : "no") << '\n';
    }
}

}  // namespace swipt
