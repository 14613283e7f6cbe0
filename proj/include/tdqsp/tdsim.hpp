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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdqsp/blockenc.hpp"
#include "tdqsp/chebyshev.hpp"
#include "tdqsp/matkernel.hpp"

namespace tdqsp {

/// Time-dependent scalar gamma(t) on [0, 1] together with its exact integral
/// alpha(t) = int_0^t gamma(s) ds.
class CoefficientFn {
   public:
    enum class Kind { constant, polynomial, trig, rectangle };

    static CoefficientFn constant(double c);
    /// gamma(t) = sum_k a_k t^k.
    static CoefficientFn polynomial(std::vector<double> monomial_coeffs);
    /// gamma(t) = exp(-i m omega t).
    static CoefficientFn trig(int m, double omega);
    /// Pulse of height `amplitude` on [t_on, t_off], realized by the even
    /// rectangle polynomial in u = (t - c) / (1 + c), c = (t_on + t_off) / 2.
    /// `delta` is the transition half-width and `eps` the band tolerance, both
    /// in time units.
    static CoefficientFn rectangle(double t_on, double t_off, double amplitude, double delta, double eps);

    Kind kind() const noexcept { return kind_; }
    const char *kind_name() const noexcept;

    /// gamma(t), t in [0, 1].
    Complex eval(double t) const;
    /// alpha(t), t in [0, 1].
    Complex integral(double t) const;

    /// Analytic continuations to [-1, 1]; what the signal-processing approximants fit.
    Complex eval_extended(double x) const;
    Complex integral_extended(double x) const;

    // Parameters (meaningful for the matching kind only).
    double constant_value() const noexcept { return value_; }
    const std::vector<double> &monomials() const noexcept { return monomials_; }
    int trig_m() const noexcept { return m_; }
    double trig_omega() const noexcept { return omega_; }
    double t_on() const noexcept { return t_on_; }
    double t_off() const noexcept { return t_off_; }
    double amplitude() const noexcept { return value_; }
    double rect_delta() const noexcept { return delta_; }
    double rect_eps() const noexcept { return eps_; }

   private:
    CoefficientFn() = default;
    void check_bounded() const;

    Kind kind_ = Kind::constant;
    double value_ = 0.0;
    std::vector<double> monomials_;
    int m_ = 0;
    double omega_ = 0.0;
    double t_on_ = 0.0, t_off_ = 0.0, delta_ = 0.0, eps_ = 0.0;
    double center_ = 0.0;
    ChebyshevPoly pulse_;       // in u
    ChebyshevPoly pulse_integral_;  // antiderivative in u, zero at u = 0
};

Complex coeff_eval(const CoefficientFn &c, double t);
Complex coeff_integral(const CoefficientFn &c, double t);

enum class InputMode { evolution_oracle, direct_encoding };

const char *to_string(InputMode m);

/// prefactor * (Pauli string). The default 1/2 keeps the norm within the
/// evolution-oracle bound.
struct PauliOperator {
    PauliString string;
    double prefactor = 0.5;
};

struct Term {
    CoefficientFn coeff;
    std::variant<ComplexMatrix, PauliOperator> op;
    InputMode mode = InputMode::evolution_oracle;
};

/// H(t) = sum_i gamma_i(t) H_i on `system_qubits` qubits.
class TDHamiltonian {
   public:
    TDHamiltonian(int system_qubits, std::vector<Term> terms);

    int system_qubits() const noexcept { return system_qubits_; }
    Eigen::Index dim() const noexcept { return Eigen::Index{1} << system_qubits_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term> &terms() const noexcept { return terms_; }
    const Term &term(std::size_t i) const { return terms_.at(i); }
    /// Materialized H_i.
    const ComplexMatrix &term_matrix(std::size_t i) const { return matrices_.at(i); }
    /// H(t).
    ComplexMatrix at(double t) const;

   private:
    int system_qubits_;
    std::vector<Term> terms_;
    std::vector<ComplexMatrix> matrices_;
};

struct CommutingReport {
    bool pass = true;
    double max_commutator_norm = 0.0;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
    /// max ||[H(t1), H(t2)]|| over a 5 x 5 grid of sample times (cross-check).
    double max_time_pair_norm = 0.0;
};

/// Pairwise ||[H_i, H_j]|| <= tol for all i < j.
CommutingReport check_commuting(const TDHamiltonian &td, double tol = 1e-10);

/// sum_i alpha_i(t) H_i.
ComplexMatrix h_integral(const TDHamiltonian &td, double t);

enum class SimulationMode { effective_time, m_fold };

const char *to_string(SimulationMode m);

struct SimulateOptions {
    SimulationMode mode = SimulationMode::effective_time;
    /// Run even when check_commuting fails; the output then approximates
    /// exp(-i int H), not the time-ordered propagator.
    bool force_noncommuting = false;
    double commute_tol = 1e-10;
};

/// Block encoding of exp(-i h_integral(td, t)) within eps.
BlockEncoding simulate_td(const TDHamiltonian &td, double t, double eps, QueryLedger &ledger,
                          const SimulateOptions &opts = {});

/// Midpoint-sampled time-ordered product of exp(-i H(t_k) dt).
ComplexMatrix reference_propagator(const TDHamiltonian &td, double t, int steps);

/// First-order Lie-Trotter with left-endpoint sampling.
ComplexMatrix trotter1(const TDHamiltonian &td, double t, int steps);

struct QueryReport {
    long w_gate_uses = 0;
    long encoding_uses = 0;
    int ancillas_peak = 0;
    int jacobi_degree = 0;
    long reunitarizations = 0;
    /// Sum of the scalar-approximant degrees recorded under "alpha[...]".
    long alpha_degree_sum = 0;
    std::vector<std::pair<std::string, int>> degrees;
};

QueryReport query_report(const QueryLedger &ledger);

}  // namespace tdqsp
