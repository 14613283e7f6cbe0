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

#include <string>

#include "json.hpp"
#include "tdqsp/errors.hpp"
#include "tdqsp/models.hpp"

namespace tdqsp {

/// Malformed config text, unknown key, or out-of-range value.
class ConfigError : public Error {
   public:
    using Error::Error;
};

enum class RunMode { effective_time, m_fold, trotter1 };

const char *to_string(RunMode m);

struct RunConfig {
    ModelSpec model;
    double t = 1.0;
    double eps = 1e-6;
    RunMode mode = RunMode::effective_time;
    bool force_noncommuting = false;
    int oracle_steps = 10000;
    /// Step count for the trotter1 mode.
    int trotter_steps = 100;
    std::string output_path;
};

RunConfig parse_config(const std::string &text);
RunConfig load_config(const std::string &path);

nlohmann::json config_to_json(const RunConfig &cfg);
std::string serialize_config(const RunConfig &cfg);

/// Re-checks every range constraint; throws ConfigError.
void validate_config(const RunConfig &cfg);

}  // namespace tdqsp
