// Copyright 2026 The tdqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdqsp/commands.hpp"

namespace {

using namespace tdqsp;

std::optional<RunMode> parse_mode_flag(const std::string &s) {
    if (s.empty()) return std::nullopt;
    if (s == "effective-time") return RunMode::effective_time;
    if (s == "m-fold") return RunMode::m_fold;
    if (s == "trotter1") return RunMode::trotter1;
    throw ConfigError("--mode must be effective-time, m-fold or trotter1");
}

std::vector<double> parse_values(const std::string &list) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < list.size()) {
        const std::size_t comma = std::min(list.find(',', pos), list.size());
        const std::string item = list.substr(pos, comma - pos);
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw ConfigError("--values: cannot parse '" + item + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulation of commuting time-dependent Hamiltonians with quantum signal processing"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string mode;
    bool force = false;
    bool no_timing = false;
    int oracle_steps = 0;
    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "JSON run configuration")->required();
        cmd->add_option("--mode", mode, "effective-time | m-fold | trotter1");
        cmd->add_flag("--force-noncommuting", force, "run even when the terms do not commute");
        cmd->add_option("--oracle-steps", oracle_steps, "steps of the time-ordered reference oracle");
        cmd->add_flag("--no-timing", no_timing, "write runtime_ms as 0 for reproducible output");
    };

    auto *simulate = app.add_subcommand("simulate", "run one configuration and write a CSV row");
    add_common(simulate);
    simulate->add_option("--out", out_path, "CSV output path (default: config output_path, else stdout)");

    std::string param;
    std::string values;
    auto *sweep = app.add_subcommand("sweep", "run a parameter sweep and write one CSV row per value");
    add_common(sweep);
    sweep->add_option("--out", out_path, "CSV output path (default: config output_path, else stdout)");
    sweep->add_option("--param", param, "eps | t | n | steps")->required();
    sweep->add_option("--values", values, "comma-separated values")->required();

    auto *verify = app.add_subcommand("verify", "check the configured model's invariants and oracle convergence");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    Overrides ov;
    try {
        ov.mode = parse_mode_flag(mode);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    ov.force_noncommuting = force;
    if (oracle_steps != 0) ov.oracle_steps = oracle_steps;
    ov.timing = !no_timing;

    if (simulate->parsed()) {
        return cmd_simulate(config_path, out_path, ov, std::cout, std::cerr);
    }
    if (sweep->parsed()) {
        const auto which = parse_sweep_param(param);
        if (!which) {
            std::cerr << "config error: --param must be eps, t, n or steps\n";
            return kExitConfig;
        }
        std::vector<double> parsed;
        try {
            parsed = parse_values(values);
        } catch (const ConfigError &e) {
            std::cerr << "config error: " << e.what() << '\n';
            return kExitConfig;
        }
        return cmd_sweep(config_path, *which, parsed, out_path, ov, std::cout, std::cerr);
    }
    return cmd_verify(config_path, ov, std::cout, std::cerr);
}
