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

#include "tdqsp/models.hpp"

#include <cmath>
#include <numbers>

#include "tdqsp/errors.hpp"

namespace tdqsp {

PauliString lattice_term(int n, int j) {
    static constexpr Pauli cycle[] = {Pauli::X, Pauli::Y, Pauli::Z};
    return PauliString::identity(static_cast<std::size_t>(n))
        .with(static_cast<std::size_t>(j), cycle[j % 3])
        .with(static_cast<std::size_t>(j + 1), cycle[(j + 1) % 3]);
}

TDHamiltonian lattice_chain(int n, const std::vector<CoefficientFn> &coeffs, InputMode mode) {
    if (n < 2 || n > kLatticeMaxQubits) {
        throw ModelError("lattice_chain: n must lie in [2, 7]");
    }
    if (coeffs.size() != static_cast<std::size_t>(n - 1)) {
        throw ModelError("lattice_chain: need exactly n - 1 coefficients, got " + std::to_string(coeffs.size()));
    }
    std::vector<Term> terms;
    for (int j = 0; j + 1 < n; ++j) {
        terms.push_back(Term{coeffs[j], PauliOperator{lattice_term(n, j), 0.5}, mode});
    }
    return TDHamiltonian(n, std::move(terms));
}

TDHamiltonian floquet_hamiltonian(double period, int m_max, const std::map<int, ComplexMatrix> &modes,
                                  InputMode mode) {
    if (!(period > 0.0) || !std::isfinite(period)) {
        throw ModelError("floquet_hamiltonian: period must be positive");
    }
    if (m_max < 0) {
        throw ModelError("floquet_hamiltonian: m_max must be >= 0");
    }
    if (modes.empty()) {
        throw ModelError("floquet_hamiltonian: no Fourier modes given");
    }
    const Eigen::Index dim = modes.begin()->second.rows();
    for (const auto &[m, h] : modes) {
        if (std::abs(m) > m_max) {
            throw ModelError("floquet_hamiltonian: mode " + std::to_string(m) + " exceeds m_max");
        }
        if (h.rows() != dim || h.cols() != dim) {
            throw ModelError("floquet_hamiltonian: modes differ in dimension");
        }
    }
    const auto mode_or_zero = [&](int m) -> ComplexMatrix {
        auto it = modes.find(m);
        return it == modes.end() ? ComplexMatrix::Zero(dim, dim) : it->second;
    };
    for (int m = 0; m <= m_max; ++m) {
        const double gap = (mode_or_zero(-m) - mode_or_zero(m).adjoint()).cwiseAbs().maxCoeff();
        if (gap > kStructuralTol) {
            throw ModelError("floquet_hamiltonian: H_{-" + std::to_string(m) + "} != H_" + std::to_string(m) +
                             "^dagger (H(t) would not be Hermitian)");
        }
    }
    for (auto a = modes.begin(); a != modes.end(); ++a) {
        for (auto b = std::next(a); b != modes.end(); ++b) {
            if (spectral_norm(commutator(a->second, b->second)) > kStructuralTol) {
                throw ModelError("floquet_hamiltonian: modes " + std::to_string(a->first) + " and " +
                                 std::to_string(b->first) + " do not commute");
            }
        }
    }
    int qubits = 0;
    while ((Eigen::Index{1} << qubits) < dim) ++qubits;
    if ((Eigen::Index{1} << qubits) != dim) {
        throw ModelError("floquet_hamiltonian: dimension is not a power of two");
    }
    const double omega = 2.0 * std::numbers::pi / period;
    std::vector<Term> terms;
    for (const auto &[m, h] : modes) {
        if (h.cwiseAbs().maxCoeff() == 0.0) continue;
        auto coeff = m == 0 ? CoefficientFn::constant(1.0) : CoefficientFn::trig(m, omega);
        terms.push_back(Term{std::move(coeff), h, mode});
    }
    return TDHamiltonian(qubits, std::move(terms));
}

TDHamiltonian ising_quench(int n, double coupling, double field, std::pair<double, double> window, double delta,
                           double eps_rect) {
    if (n < 2 || n > kIsingMaxQubits) {
        throw ModelError("ising_quench: n must lie in [2, 6]");
    }
    if (!(std::abs(coupling) <= 1.0) || !(std::abs(field) <= 1.0)) {
        throw ModelError("ising_quench: |J| and |h_amp| must be <= 1");
    }
    std::vector<Term> terms;
    if (coupling != 0.0) {
        for (int j = 0; j + 1 < n; ++j) {
            const auto zz = PauliString::identity(n).with(j, Pauli::Z).with(j + 1, Pauli::Z);
            terms.push_back(Term{CoefficientFn::constant(-coupling), PauliOperator{zz, 1.0},
                                 InputMode::direct_encoding});
        }
    }
    CoefficientFn pulse = [&] {
        try {
            return CoefficientFn::rectangle(window.first, window.second, -field, delta, eps_rect);
        } catch (const DomainError &e) {
            throw ModelError(std::string("ising_quench: infeasible rectangle bands: ") + e.what());
        }
    }();
    for (int j = 0; j < n; ++j) {
        terms.push_back(Term{pulse, PauliOperator{PauliString::single(n, j, Pauli::X), 1.0},
                             InputMode::direct_encoding});
    }
    return TDHamiltonian(n, std::move(terms));
}

ComplexMatrix pauli_sum_matrix(const PauliSum &sum) {
    if (sum.empty()) {
        throw ModelError("pauli_sum_matrix: empty sum");
    }
    ComplexMatrix out;
    for (const auto &[labels, c] : sum) {
        const ComplexMatrix p = c * pauli_matrix(PauliString(labels));
        if (out.size() == 0) {
            out = p;
        } else if (out.rows() != p.rows()) {
            throw ModelError("pauli_sum_matrix: strings differ in length");
        } else {
            out += p;
        }
    }
    return out;
}

std::vector<CoefficientFn> default_lattice_coeffs(int n) {
    std::vector<CoefficientFn> out;
    for (int j = 0; j + 1 < n; ++j) {
        out.push_back(j % 2 == 0 ? CoefficientFn::polynomial({1.0, -1.0})
                                 : CoefficientFn::polynomial({0.5, 0.0, 0.3}));
    }
    return out;
}

std::string ModelSpec::name() const {
    struct {
        std::string operator()(const LatticeParams &) const { return "lattice"; }
        std::string operator()(const FloquetParams &) const { return "floquet"; }
        std::string operator()(const IsingParams &) const { return "ising_quench"; }
    } v;
    return std::visit(v, params);
}

int ModelSpec::system_qubits() const {
    struct {
        int operator()(const LatticeParams &p) const { return p.n; }
        int operator()(const FloquetParams &p) const {
            for (const auto &[m, sum] : p.modes) {
                if (!sum.empty()) return static_cast<int>(sum.front().first.size());
            }
            return 0;
        }
        int operator()(const IsingParams &p) const { return p.n; }
    } v;
    return std::visit(v, params);
}

bool ModelSpec::expected_commuting() const {
    if (const auto *p = std::get_if<IsingParams>(&params)) {
        return p->coupling == 0.0;
    }
    return true;
}

ModelSpec bundled_model(const std::string &name) {
    if (name == "lattice") {
        return ModelSpec{LatticeParams{}};
    }
    if (name == "floquet") {
        FloquetParams p;
        p.modes[0] = {{"ZI", 0.3}};
        p.modes[1] = {{"ZZ", 0.2}};
        p.modes[-1] = {{"ZZ", 0.2}};
        return ModelSpec{p};
    }
    if (name == "ising_quench") {
        return ModelSpec{IsingParams{}};
    }
    throw ModelError("unknown model '" + name + "'");
}

TDHamiltonian build_model(const ModelSpec &spec) {
    struct {
        TDHamiltonian operator()(const LatticeParams &p) const {
            return lattice_chain(p.n, p.coeffs.empty() ? default_lattice_coeffs(p.n) : p.coeffs, p.mode);
        }
        TDHamiltonian operator()(const FloquetParams &p) const {
            std::map<int, ComplexMatrix> modes;
            for (const auto &[m, sum] : p.modes) {
                modes.emplace(m, pauli_sum_matrix(sum));
            }
            return floquet_hamiltonian(p.period, p.m_max, modes, p.mode);
        }
        TDHamiltonian operator()(const IsingParams &p) const {
            return ising_quench(p.n, p.coupling, p.field, {p.t_on, p.t_off}, p.delta, p.eps_rect);
        }
    } v;
    return std::visit(v, spec.params);
}

}  // namespace tdqsp
