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

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tdqsp/tdsim.hpp"

namespace tdqsp {

constexpr int kLatticeMaxQubits = 7;
constexpr int kIsingMaxQubits = 6;

/// One-dimensional chain with nearest-neighbour terms P_j P'_{j+1}; the Pauli
/// labels cycle X -> Y -> Z along the chain so consecutive terms share the
/// middle operator and all terms commute. Each term is (1/2) * string.
TDHamiltonian lattice_chain(int n, const std::vector<CoefficientFn> &coeffs,
                            InputMode mode = InputMode::evolution_oracle);

/// Pauli labels of lattice term j (0-based) on an n-site chain.
PauliString lattice_term(int n, int j);

/// H(t) = sum_{|m| <= m_max} exp(-i m omega t) H_m with omega = 2 pi / T.
/// Requires H_{-m} = H_m^dagger and pairwise commuting modes; absent modes are zero.
TDHamiltonian floquet_hamiltonian(double period, int m_max, const std::map<int, ComplexMatrix> &modes,
                                  InputMode mode = InputMode::evolution_oracle);

/// H(t) = -J sum Z_j Z_{j+1} - h_amp * pulse(t) sum X_j with a rectangular pulse on [t_on, t_off].
TDHamiltonian ising_quench(int n, double coupling, double field, std::pair<double, double> window, double delta,
                           double eps_rect);

/// Pauli-sum description of a matrix, used by configs: sum_k coeff_k * string_k.
using PauliSum = std::vector<std::pair<std::string, double>>;

ComplexMatrix pauli_sum_matrix(const PauliSum &sum);

struct LatticeParams {
    int n = 3;
    std::vector<CoefficientFn> coeffs;  // empty -> default_lattice_coeffs(n)
    InputMode mode = InputMode::evolution_oracle;
};

struct FloquetParams {
    double period = 1.0;
    int m_max = 1;
    std::map<int, PauliSum> modes;
    InputMode mode = InputMode::evolution_oracle;
};

struct IsingParams {
    int n = 3;
    double coupling = 0.5;
    double field = 1.0;
    double t_on = 0.2;
    double t_off = 0.7;
    double delta = 0.05;
    double eps_rect = 1e-3;
};

struct ModelSpec {
    std::variant<LatticeParams, FloquetParams, IsingParams> params;

    /// "lattice", "floquet" or "ising_quench".
    std::string name() const;
    int system_qubits() const;
    bool expected_commuting() const;
};

/// The chain's default coefficients: 1 - t and 0.5 + 0.3 t^2, alternating.
std::vector<CoefficientFn> default_lattice_coeffs(int n);

/// Desk-scale default parameters for a named model.
ModelSpec bundled_model(const std::string &name);

TDHamiltonian build_model(const ModelSpec &spec);

}  // namespace tdqsp
