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

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../tests/acceptance/criteria.hpp"
#include "swipt/gain_sweep.hpp"
#include "swipt/sweep.hpp"

namespace {

std::string summary_path(const std::string& out) {
    const std::string ext = ".csv";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0) {
        return out.substr(0, out.size() - ext.size()) + ".summary.csv";
    }
    return out + ".summary.csv";
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual-IRS SWIPT simulation and validation"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Monte Carlo sweep from a config file");
    std::string config, out;
    std::uint64_t seed = 0;
    int trials = 0;
    int jobs = 1;
    bool timing = false;
    run->add_option("--config", config, "key = value scenario file")->required()->check(CLI::ExistingFile);
    run->add_option("--out", out, "CSV output path")->required();
    run->add_option("--seed", seed, "master seed")->required();
    run->add_option("--trials", trials, "trials per sweep cell (overrides config)")->check(CLI::PositiveNumber);
    run->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--timing", timing, "record wall_ms (output is then not reproducible)");

    auto* gain = app.add_subcommand("gain-sweep", "hybrid-field gain versus element count");
    std::string axis = "x";
    int max_n = 200;
    int fixed = 10;
    double spacing = 0.2;
    double l_x = 1.0;
    double l_y = 1.0;
    std::string gain_out;
    gain->add_option("--axis", axis, "dimension to grow")->required()->check(CLI::IsMember({"x", "z"}));
    gain->add_option("--max", max_n, "largest element count")->required()->check(CLI::PositiveNumber);
    gain->add_option("--out", gain_out, "CSV output path")->required();
    gain->add_option("--fixed", fixed, "element count along the other axis")->check(CLI::PositiveNumber);
    gain->add_option("--spacing", spacing, "element spacing, m")->check(CLI::PositiveNumber);
    gain->add_option("--lx", l_x, "panel centre x offset from the AP, m")->check(CLI::PositiveNumber);
    gain->add_option("--ly", l_y, "panel centre y offset from the AP, m");

    auto* validate = app.add_subcommand("validate", "run the acceptance criteria");
    std::vector<int> only;
    bool skip_full = false;
    validate->add_option("--only", only, "criterion ids");
    validate->add_flag("--skip-full-scale", skip_full, "skip the 81/121/169-element convergence runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            swipt::Scenario s = swipt::load_scenario(config);
            s.master_seed = seed;
            if (trials > 0) s.trials = trials;
            swipt::SweepOptions opt;
            opt.jobs = jobs;
            opt.timing = timing;
            const auto rows = swipt::run_sweep(s, opt);
            std::ostringstream csv, summary;
            swipt::write_csv(csv, rows);
            const auto cells = swipt::summarize(rows);
            swipt::write_summary(summary, cells);
            write_file(out, csv.str());
            write_file(summary_path(out), summary.str());
            int flagged = 0;
            for (const auto& c : cells) flagged += c.flagged ? 1 : 0;
            std::printf("%zu rows -> %s; %zu cells -> %s", rows.size(), out.c_str(), cells.size(),
                        summary_path(out).c_str());
            if (flagged > 0) std::printf("; %d cells more than half infeasible", flagged);
            std::printf("\n");
        } else if (*gain) {
            swipt::PanelGrid g{fixed, fixed, spacing, spacing * spacing, l_x, l_y};
            std::vector<int> values;
            for (int n = 1; n <= max_n; ++n) values.push_back(n);
            const auto ax = axis == "x" ? swipt::GainAxis::X : swipt::GainAxis::Z;
            const auto rows = swipt::gain_sweep(g, swipt::FarFieldStats{}, ax, values);
            std::ostringstream csv;
            swipt::write_gain_csv(csv, ax, rows);
            write_file(gain_out, csv.str());
            std::printf("%zu rows -> %s\n", rows.size(), gain_out.c_str());
        } else if (*validate) {
            swipt::validation::CriteriaOptions options;
            options.full_scale = !skip_full;
            const auto ids = only.empty() ? swipt::validation::criterion_ids() : only;
            int failed = 0;
            for (const int id : ids) {
                const auto r = swipt::validation::run_criterion(id, options);
                std::printf("%s\n", swipt::validation::format_result(r).c_str());
                std::fflush(stdout);
                if (!r.pass) ++failed;
            }
            std::printf("%zu criteria, %d failed\n", ids.size(), failed);
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "swipt: %s\n", e.what());
        return 2;
    }
    return 0;
}
