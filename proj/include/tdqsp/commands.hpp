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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdqsp/config.hpp"

namespace tdqsp {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitPrecondition = 3, kExitConvergence = 4 };

struct ResultRow {
    std::string model;
    int n = 0;
    double t = 0.0;
    double eps = 0.0;
    double error_vs_expm = 0.0;
    double error_vs_timeordered = 0.0;
    long w_gate_uses = 0;
    long encoding_uses = 0;
    int jacobi_degree = 0;
    int ancillas_peak = 0;
    bool commuting_pass = false;
    /// Wall-clock metadata; the only nondeterministic column.
    double runtime_ms = 0.0;
    /// Set on rows whose run failed; error columns then print as nan.
    bool failed = false;
};

const std::string &csv_header();
std::string format_row(const ResultRow &row);

/// Command-line settings that take precedence over the config file.
struct Overrides {
    std::optional<RunMode> mode;
    bool force_noncommuting = false;
    std::optional<int> oracle_steps;
    /// When false, runtime_ms is written as 0 so output is byte-reproducible.
    bool timing = true;
};

RunConfig apply_overrides(RunConfig cfg, const Overrides &ov);

/// Runs one configuration; throws the library's error types on failure.
ResultRow run_config(const RunConfig &cfg, bool timing = true);

/// Maps an in-flight exception to an exit code and prints a diagnostic to `err`.
int exit_code_for_current_exception(std::ostream &err);

enum class SweepParam { eps, t, n, steps };

std::optional<SweepParam> parse_sweep_param(const std::string &name);

/// Copy of `base` with the swept parameter set to `value`. For n on the
/// lattice, an explicit coefficient list is cycled to the new length.
RunConfig with_sweep_value(const RunConfig &base, SweepParam param, double value);

int cmd_simulate(const std::string &config_path, const std::string &out_path, const Overrides &ov,
                 std::ostream &log, std::ostream &err);
int cmd_sweep(const std::string &config_path, SweepParam param, const std::vector<double> &values,
              const std::string &out_path, const Overrides &ov, std::ostream &log, std::ostream &err);
int cmd_verify(const std::string &config_path, const Overrides &ov, std::ostream &log, std::ostream &err);

}  // namespace tdqsp
