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

#include "tdqsp/commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include "tdqsp/errors.hpp"
#include "tdqsp/tdsim.hpp"

namespace tdqsp {

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Destination of CSV output: the named file, or `fallback` when empty.
class CsvSink {
   public:
    CsvSink(const std::string &path, std::ostream &fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw ConfigError("cannot open output file '" + path + "'");
            out_ = &file_;
        }
    }
    void write(const std::string &line) { *out_ << line << '\n' << std::flush; }

   private:
    std::ofstream file_;
    std::ostream *out_;
};

const std::string &pick_output(const std::string &cli_path, const RunConfig &cfg) {
    return cli_path.empty() ? cfg.output_path : cli_path;
}

}  // namespace

const std::string &csv_header() {
    static const std::string h =
        "model,n,t,eps,error_vs_expm,error_vs_timeordered,w_gate_uses,encoding_uses,jacobi_degree,ancillas_peak,"
        "commuting_pass,runtime_ms";
    return h;
}

std::string format_row(const ResultRow &r) {
    const double nan = std::nan("");
    std::string s;
    s += r.model + ',' + std::to_string(r.n) + ',' + format_double(r.t) + ',' + format_double(r.eps) + ',';
    s += format_double(r.failed ? nan : r.error_vs_expm) + ',';
    s += format_double(r.failed ? nan : r.error_vs_timeordered) + ',';
    s += std::to_string(r.w_gate_uses) + ',' + std::to_string(r.encoding_uses) + ',' +
         std::to_string(r.jacobi_degree) + ',' + std::to_string(r.ancillas_peak) + ',';
    s += std::string(r.commuting_pass ? "true" : "false") + ',' + format_ms(r.runtime_ms);
    return s;
}

RunConfig apply_overrides(RunConfig cfg, const Overrides &ov) {
    if (ov.mode) cfg.mode = *ov.mode;
    if (ov.force_noncommuting) cfg.force_noncommuting = true;
    if (ov.oracle_steps) cfg.oracle_steps = *ov.oracle_steps;
    validate_config(cfg);
    return cfg;
}

ResultRow run_config(const RunConfig &cfg, bool timing) {
    validate_config(cfg);
    const auto td = build_model(cfg.model);
    ResultRow row;
    row.model = cfg.model.name();
    row.n = td.system_qubits();
    row.t = cfg.t;
    row.eps = cfg.eps;
    row.commuting_pass = check_commuting(td).pass;

    const auto start = std::chrono::steady_clock::now();
    ComplexMatrix propagator;
    if (cfg.mode == RunMode::trotter1) {
        propagator = trotter1(td, cfg.t, cfg.trotter_steps);
    } else {
        QueryLedger ledger;
        SimulateOptions opts;
        opts.mode = cfg.mode == RunMode::m_fold ? SimulationMode::m_fold : SimulationMode::effective_time;
        opts.force_noncommuting = cfg.force_noncommuting;
        const auto be = simulate_td(td, cfg.t, cfg.eps, ledger, opts);
        propagator = be_corner(be);
        const auto report = query_report(ledger);
        row.w_gate_uses = report.w_gate_uses;
        row.encoding_uses = report.encoding_uses;
        row.jacobi_degree = report.jacobi_degree;
        row.ancillas_peak = report.ancillas_peak;
    }
    const auto stop = std::chrono::steady_clock::now();
    row.runtime_ms = timing ? std::chrono::duration<double, std::milli>(stop - start).count() : 0.0;

    row.error_vs_expm = spectral_norm(propagator - expm_i(h_integral(td, cfg.t), 1.0));
    row.error_vs_timeordered = spectral_norm(propagator - reference_propagator(td, cfg.t, cfg.oracle_steps));
    return row;
}

int exit_code_for_current_exception(std::ostream &err) {
    try {
        throw;
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ConvergenceError &e) {
        err << "convergence failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return kExitConvergence;
    } catch (const CommutativityError &e) {
        err << "precondition failure: " << e.what() << "\n  (rerun with --force-noncommuting to simulate exp(-i int H))\n";
        return kExitPrecondition;
    } catch (const Error &e) {
        err << "precondition failure: " << e.what() << '\n';
        return kExitPrecondition;
    }
}

std::optional<SweepParam> parse_sweep_param(const std::string &name) {
    if (name == "eps") return SweepParam::eps;
    if (name == "t") return SweepParam::t;
    if (name == "n") return SweepParam::n;
    if (name == "steps") return SweepParam::steps;
    return std::nullopt;
}

RunConfig with_sweep_value(const RunConfig &base, SweepParam param, double value) {
    RunConfig cfg = base;
    auto as_int = [&](const char *what) {
        if (value != std::floor(value) || std::abs(value) > 1e9) {
            throw ConfigError(std::string(what) + " sweep values must be integers");
        }
        return static_cast<int>(value);
    };
    switch (param) {
        case SweepParam::eps:
            cfg.eps = value;
            break;
        case SweepParam::t:
            cfg.t = value;
            break;
        case SweepParam::steps:
            (cfg.mode == RunMode::trotter1 ? cfg.trotter_steps : cfg.oracle_steps) = as_int("steps");
            break;
        case SweepParam::n: {
            const int n = as_int("n");
            if (auto *p = std::get_if<LatticeParams>(&cfg.model.params)) {
                p->n = n;
                if (!p->coeffs.empty() && n >= 2) {
                    std::vector<CoefficientFn> cycled;
                    for (int j = 0; j + 1 < n; ++j) cycled.push_back(p->coeffs[j % p->coeffs.size()]);
                    p->coeffs = std::move(cycled);
                }
            } else if (auto *q = std::get_if<IsingParams>(&cfg.model.params)) {
                q->n = n;
            } else {
                throw ConfigError("n sweep is not supported for the floquet model (n follows its Pauli strings)");
            }
            break;
        }
    }
    validate_config(cfg);
    return cfg;
}

int cmd_simulate(const std::string &config_path, const std::string &out_path, const Overrides &ov,
                 std::ostream &log, std::ostream &err) {
    try {
        const auto cfg = apply_overrides(load_config(config_path), ov);
        const auto row = run_config(cfg, ov.timing);
        CsvSink sink(pick_output(out_path, cfg), log);
        sink.write(csv_header());
        sink.write(format_row(row));
        return kExitOk;
    } catch (...) {
        return exit_code_for_current_exception(err);
    }
}

int cmd_sweep(const std::string &config_path, SweepParam param, const std::vector<double> &values,
              const std::string &out_path, const Overrides &ov, std::ostream &log, std::ostream &err) {
    std::vector<RunConfig> configs;
    RunConfig base;
    try {
        base = apply_overrides(load_config(config_path), ov);
        for (double v : values) configs.push_back(with_sweep_value(base, param, v));
    } catch (...) {
        return exit_code_for_current_exception(err);
    }
    int status = kExitOk;
    try {
        CsvSink sink(pick_output(out_path, base), log);
        sink.write(csv_header());
        for (const auto &cfg : configs) {
            try {
                sink.write(format_row(run_config(cfg, ov.timing)));
            } catch (...) {
                const int code = exit_code_for_current_exception(err);
                if (status == kExitOk) status = code;
                ResultRow row;
                row.model = cfg.model.name();
                row.n = cfg.model.system_qubits();
                row.t = cfg.t;
                row.eps = cfg.eps;
                row.failed = true;
                sink.write(format_row(row));
            }
        }
    } catch (...) {
        return exit_code_for_current_exception(err);
    }
    return status;
}

int cmd_verify(const std::string &config_path, const Overrides &ov, std::ostream &log, std::ostream &err) {
    try {
        const auto cfg = apply_overrides(load_config(config_path), ov);
        const auto td = build_model(cfg.model);
        log << "model " << cfg.model.name() << ", " << td.system_qubits() << " qubits, " << td.size() << " terms\n";

        constexpr int hermitian_samples = 25;
        double worst = 0.0;
        for (int k = 0; k < hermitian_samples; ++k) {
            const double t = static_cast<double>(k) / (hermitian_samples - 1);
            const ComplexMatrix h = td.at(t);
            worst = std::max(worst, (h - h.adjoint()).cwiseAbs().maxCoeff());
            h_integral(td, t);
        }
        log << "hermiticity: max |H - H^dagger| = " << worst << " over " << hermitian_samples << " times: ok\n";

        const auto report = check_commuting(td);
        log << "commutativity: max pairwise norm " << report.max_commutator_norm << ", time-pair norm "
            << report.max_time_pair_norm << ": " << (report.pass ? "ok" : "FAIL") << '\n';
        if (!report.pass && !cfg.force_noncommuting) {
            err << "precondition failure: terms do not commute";
            if (report.offending) err << " (terms " << report.offending->first << ", " << report.offending->second << ")";
            err << '\n';
            return kExitPrecondition;
        }

        // Midpoint oracle is second order: successive differences shrink by ~4.
        constexpr int base_steps = 32;
        const ComplexMatrix r1 = reference_propagator(td, cfg.t, base_steps);
        const ComplexMatrix r2 = reference_propagator(td, cfg.t, 2 * base_steps);
        const ComplexMatrix r4 = reference_propagator(td, cfg.t, 4 * base_steps);
        const double d12 = spectral_norm(r1 - r2);
        const double d24 = spectral_norm(r2 - r4);
        constexpr double roundoff_floor = 1e-12;
        const bool converged = d12 <= roundoff_floor || (d24 > 0.0 && d12 / d24 >= 3.0 && d12 / d24 <= 5.0);
        log << "oracle self-convergence: |R(32)-R(64)| = " << d12 << ", |R(64)-R(128)| = " << d24;
        if (d12 > roundoff_floor) log << ", ratio " << d12 / d24;
        log << ": " << (converged ? "ok" : "FAIL") << '\n';
        if (!converged) {
            err << "convergence failure: reference oracle ratio outside [3, 5]\n";
            return kExitConvergence;
        }
        return kExitOk;
    } catch (...) {
        return exit_code_for_current_exception(err);
    }
}

}  // namespace tdqsp
