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

#include "tdqsp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace tdqsp {

using nlohmann::json;

namespace {

constexpr int kMaxSteps = 10'000'000;

void reject_unknown(const json &obj, std::initializer_list<const char *> allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + ": expected an object");
    }
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto &[key, value] : obj.items()) {
        if (!keys.count(key)) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
}

const json &required(const json &obj, const char *key, const std::string &where) {
    if (!obj.contains(key)) {
        throw ConfigError(where + ": missing key '" + key + "'");
    }
    return obj.at(key);
}

template <typename T>
T get_as(const json &value, const std::string &where) {
    try {
        return value.get<T>();
    } catch (const json::exception &) {
        throw ConfigError(where + ": wrong value type");
    }
}

template <typename T>
T optional_value(const json &obj, const char *key, T fallback, const std::string &where) {
    return obj.contains(key) ? get_as<T>(obj.at(key), where + "." + key) : fallback;
}

InputMode parse_input_mode(const std::string &s) {
    if (s == "evolution-oracle") return InputMode::evolution_oracle;
    if (s == "direct-encoding") return InputMode::direct_encoding;
    throw ConfigError("input_mode must be 'evolution-oracle' or 'direct-encoding'");
}

CoefficientFn parse_coefficient(const json &j, const std::string &where) {
    const auto kind = get_as<std::string>(required(j, "kind", where), where + ".kind");
    try {
        if (kind == "constant") {
            reject_unknown(j, {"kind", "value"}, where);
            return CoefficientFn::constant(get_as<double>(required(j, "value", where), where));
        }
        if (kind == "polynomial") {
            reject_unknown(j, {"kind", "coeffs"}, where);
            return CoefficientFn::polynomial(get_as<std::vector<double>>(required(j, "coeffs", where), where));
        }
        if (kind == "trig") {
            reject_unknown(j, {"kind", "m", "omega"}, where);
            return CoefficientFn::trig(get_as<int>(required(j, "m", where), where),
                                       get_as<double>(required(j, "omega", where), where));
        }
        if (kind == "rectangle") {
            reject_unknown(j, {"kind", "t_on", "t_off", "amplitude", "delta", "eps"}, where);
            return CoefficientFn::rectangle(
                get_as<double>(required(j, "t_on", where), where), get_as<double>(required(j, "t_off", where), where),
                get_as<double>(required(j, "amplitude", where), where),
                get_as<double>(required(j, "delta", where), where), get_as<double>(required(j, "eps", where), where));
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const Error &e) {
        throw ConfigError(where + ": " + e.what());
    }
    throw ConfigError(where + ": unknown coefficient kind '" + kind + "'");
}

json coefficient_to_json(const CoefficientFn &c) {
    switch (c.kind()) {
        case CoefficientFn::Kind::constant:
            return {{"kind", "constant"}, {"value", c.constant_value()}};
        case CoefficientFn::Kind::polynomial:
            return {{"kind", "polynomial"}, {"coeffs", c.monomials()}};
        case CoefficientFn::Kind::trig:
            return {{"kind", "trig"}, {"m", c.trig_m()}, {"omega", c.trig_omega()}};
        case CoefficientFn::Kind::rectangle:
            return {{"kind", "rectangle"}, {"t_on", c.t_on()},       {"t_off", c.t_off()},
                    {"amplitude", c.amplitude()}, {"delta", c.rect_delta()}, {"eps", c.rect_eps()}};
    }
    return {};
}

PauliSum parse_pauli_sum(const json &j, const std::string &where) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(where + ": expected a non-empty array of {pauli, coeff}");
    }
    PauliSum sum;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        reject_unknown(j[k], {"pauli", "coeff"}, w);
        auto labels = get_as<std::string>(required(j[k], "pauli", w), w + ".pauli");
        if (labels.empty() || labels.find_first_not_of("IXYZ") != std::string::npos) {
            throw ConfigError(w + ": Pauli labels must be drawn from IXYZ");
        }
        if (!sum.empty() && labels.size() != sum.front().first.size()) {
            throw ConfigError(w + ": Pauli strings differ in length");
        }
        sum.emplace_back(std::move(labels), get_as<double>(required(j[k], "coeff", w), w + ".coeff"));
    }
    return sum;
}

ModelSpec parse_model(const json &j) {
    const std::string where = "model";
    const auto name = get_as<std::string>(required(j, "name", where), "model.name");
    if (name == "lattice") {
        reject_unknown(j, {"name", "n", "coeffs", "input_mode"}, where);
        LatticeParams p;
        p.n = optional_value(j, "n", p.n, where);
        if (j.contains("coeffs")) {
            const auto &arr = j.at("coeffs");
            if (!arr.is_array()) throw ConfigError("model.coeffs: expected an array");
            for (std::size_t k = 0; k < arr.size(); ++k) {
                p.coeffs.push_back(parse_coefficient(arr[k], "model.coeffs[" + std::to_string(k) + "]"));
            }
        }
        if (j.contains("input_mode")) p.mode = parse_input_mode(get_as<std::string>(j.at("input_mode"), where));
        return ModelSpec{p};
    }
    if (name == "floquet") {
        reject_unknown(j, {"name", "period", "m_max", "modes", "input_mode"}, where);
        FloquetParams p;
        p.period = optional_value(j, "period", p.period, where);
        p.m_max = optional_value(j, "m_max", p.m_max, where);
        const auto &arr = required(j, "modes", where);
        if (!arr.is_array()) throw ConfigError("model.modes: expected an array");
        for (std::size_t k = 0; k < arr.size(); ++k) {
            const std::string w = "model.modes[" + std::to_string(k) + "]";
            reject_unknown(arr[k], {"m", "terms"}, w);
            const int m = get_as<int>(required(arr[k], "m", w), w + ".m");
            if (p.modes.count(m)) throw ConfigError(w + ": duplicate mode index");
            p.modes[m] = parse_pauli_sum(required(arr[k], "terms", w), w + ".terms");
        }
        if (j.contains("input_mode")) p.mode = parse_input_mode(get_as<std::string>(j.at("input_mode"), where));
        return ModelSpec{p};
    }
    if (name == "ising_quench") {
        reject_unknown(j, {"name", "n", "J", "h_amp", "t_on", "t_off", "delta", "eps_rect"}, where);
        IsingParams p;
        p.n = optional_value(j, "n", p.n, where);
        p.coupling = optional_value(j, "J", p.coupling, where);
        p.field = optional_value(j, "h_amp", p.field, where);
        p.t_on = optional_value(j, "t_on", p.t_on, where);
        p.t_off = optional_value(j, "t_off", p.t_off, where);
        p.delta = optional_value(j, "delta", p.delta, where);
        p.eps_rect = optional_value(j, "eps_rect", p.eps_rect, where);
        return ModelSpec{p};
    }
    throw ConfigError("model.name: unknown model '" + name + "'");
}

json model_to_json(const ModelSpec &spec) {
    struct {
        json operator()(const LatticeParams &p) const {
            json j = {{"name", "lattice"}, {"n", p.n}, {"input_mode", to_string(p.mode)}};
            if (!p.coeffs.empty()) {
                json arr = json::array();
                for (const auto &c : p.coeffs) arr.push_back(coefficient_to_json(c));
                j["coeffs"] = arr;
            }
            return j;
        }
        json operator()(const FloquetParams &p) const {
            json modes = json::array();
            for (const auto &[m, sum] : p.modes) {
                json terms = json::array();
                for (const auto &[labels, c] : sum) terms.push_back({{"pauli", labels}, {"coeff", c}});
                modes.push_back({{"m", m}, {"terms", terms}});
            }
            return {{"name", "floquet"},
                    {"period", p.period},
                    {"m_max", p.m_max},
                    {"modes", modes},
                    {"input_mode", to_string(p.mode)}};
        }
        json operator()(const IsingParams &p) const {
            return {{"name", "ising_quench"}, {"n", p.n},         {"J", p.coupling},         {"h_amp", p.field},
                    {"t_on", p.t_on},         {"t_off", p.t_off}, {"delta", p.delta}, {"eps_rect", p.eps_rect}};
        }
    } v;
    return std::visit(v, spec.params);
}

RunMode parse_run_mode(const std::string &s) {
    if (s == "effective-time") return RunMode::effective_time;
    if (s == "m-fold") return RunMode::m_fold;
    if (s == "trotter1") return RunMode::trotter1;
    throw ConfigError("mode must be 'effective-time', 'm-fold' or 'trotter1'");
}

}  // namespace

const char *to_string(RunMode m) {
    switch (m) {
        case RunMode::effective_time:
            return "effective-time";
        case RunMode::m_fold:
            return "m-fold";
        case RunMode::trotter1:
            return "trotter1";
    }
    return "?";
}

void validate_config(const RunConfig &cfg) {
    if (!(cfg.t >= 0.0 && cfg.t <= 1.0)) throw ConfigError("t must lie in [0, 1]");
    if (!(cfg.eps > 0.0 && cfg.eps < 0.5)) throw ConfigError("eps must lie in (0, 1/2)");
    if (cfg.oracle_steps < 1 || cfg.oracle_steps > kMaxSteps) throw ConfigError("oracle_steps out of range");
    if (cfg.trotter_steps < 1 || cfg.trotter_steps > kMaxSteps) throw ConfigError("trotter_steps out of range");
    if (const auto *p = std::get_if<LatticeParams>(&cfg.model.params)) {
        if (p->n < 2 || p->n > kLatticeMaxQubits) throw ConfigError("model.n must lie in [2, 7] for lattice");
    }
    if (const auto *p = std::get_if<IsingParams>(&cfg.model.params)) {
        if (p->n < 2 || p->n > kIsingMaxQubits) throw ConfigError("model.n must lie in [2, 6] for ising_quench");
        if (!(std::abs(p->coupling) <= 1.0) || !(std::abs(p->field) <= 1.0)) {
            throw ConfigError("model.J and model.h_amp must satisfy |value| <= 1");
        }
    }
    if (const auto *p = std::get_if<FloquetParams>(&cfg.model.params)) {
        if (!(p->period > 0.0)) throw ConfigError("model.period must be positive");
        if (p->m_max < 0) throw ConfigError("model.m_max must be >= 0");
        if (p->modes.empty()) throw ConfigError("model.modes must not be empty");
    }
}

RunConfig parse_config(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    reject_unknown(j, {"model", "t", "eps", "mode", "force_noncommuting", "oracle_steps", "trotter_steps",
                       "output_path"},
                   "config");
    RunConfig cfg;
    cfg.model = parse_model(required(j, "model", "config"));
    cfg.t = get_as<double>(required(j, "t", "config"), "config.t");
    cfg.eps = get_as<double>(required(j, "eps", "config"), "config.eps");
    if (j.contains("mode")) cfg.mode = parse_run_mode(get_as<std::string>(j.at("mode"), "config.mode"));
    cfg.force_noncommuting = optional_value(j, "force_noncommuting", cfg.force_noncommuting, "config");
    cfg.oracle_steps = optional_value(j, "oracle_steps", cfg.oracle_steps, "config");
    cfg.trotter_steps = optional_value(j, "trotter_steps", cfg.trotter_steps, "config");
    cfg.output_path = optional_value(j, "output_path", cfg.output_path, "config");
    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

json config_to_json(const RunConfig &cfg) {
    json j = {{"model", model_to_json(cfg.model)},
              {"t", cfg.t},
              {"eps", cfg.eps},
              {"mode", to_string(cfg.mode)},
              {"force_noncommuting", cfg.force_noncommuting},
              {"oracle_steps", cfg.oracle_steps},
              {"trotter_steps", cfg.trotter_steps}};
    if (!cfg.output_path.empty()) j["output_path"] = cfg.output_path;
    return j;
}

std::string serialize_config(const RunConfig &cfg) { return config_to_json(cfg).dump(2) + "\n"; }

}  // namespace tdqsp
