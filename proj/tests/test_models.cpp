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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "tdqsp/errors.hpp"
#include "tdqsp/models.hpp"

namespace {

using namespace tdqsp;

constexpr double kPi = std::numbers::pi;

double max_abs(const ComplexMatrix &m) { return m.cwiseAbs().maxCoeff(); }

std::vector<CoefficientFn> constants(int count, double value) {
    return std::vector<CoefficientFn>(static_cast<std::size_t>(count), CoefficientFn::constant(value));
}

TDHamiltonian bundled(const std::string &name) { return build_model(bundled_model(name)); }

TEST(LatticeChain, ThreeSites) {
    const auto td = lattice_chain(3, constants(2, 1.0));
    ASSERT_EQ(td.size(), 2u);
    EXPECT_LE(max_abs(td.term_matrix(0) - 0.5 * oracle::pauli_string("XYI")), 0.0);
    EXPECT_LE(max_abs(td.term_matrix(1) - 0.5 * oracle::pauli_string("IYZ")), 0.0);
    const ComplexMatrix a = td.term_matrix(0), b = td.term_matrix(1);
    EXPECT_LE(max_abs(a * b - b * a), 0.0);
}

TEST(LatticeChain, TwoSitesSingleTerm) {
    const auto td = lattice_chain(2, constants(1, 0.4));
    EXPECT_EQ(td.size(), 1u);
    EXPECT_TRUE(check_commuting(td).pass);
}

TEST(LatticeChain, FourSitesMatchKroneckerAssembly) {
    const auto td = lattice_chain(4, constants(3, 1.0));
    const char *labels[] = {"XYII", "IYZI", "IIZX"};
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(td.term_matrix(j), ComplexMatrix(0.5 * oracle::pauli_string(labels[j]))) << j;
    }
}

TEST(LatticeChain, CommutesUpToSevenSites) {
    for (int n = 2; n <= kLatticeMaxQubits; ++n) {
        const auto report = check_commuting(lattice_chain(n, default_lattice_coeffs(n)), 1e-12);
        EXPECT_TRUE(report.pass) << n;
        EXPECT_LE(report.max_commutator_norm, 1e-12);
    }
}

TEST(LatticeChain, Errors) {
    EXPECT_THROW(lattice_chain(3, constants(3, 1.0)), ModelError);
    EXPECT_THROW(lattice_chain(1, {}), ModelError);
    EXPECT_THROW(lattice_chain(8, constants(7, 1.0)), ModelError);
}

TEST(Floquet, StaticLimit) {
    const ComplexMatrix h0 = 0.3 * oracle::pauli_string("ZX");
    const auto td = floquet_hamiltonian(1.0, 0, {{0, h0}});
    EXPECT_EQ(td.size(), 1u);
    QueryLedger ledger;
    const auto out = simulate_td(td, 0.7, 1e-8, ledger);
    EXPECT_LE(be_verify(out, oracle::taylor_expm(h0, 0.7)), 1e-8);
}

TEST(Floquet, BundledModelAssembly) {
    const auto td = bundled("floquet");
    const ComplexMatrix h0 = 0.3 * oracle::pauli_string("ZI");
    const ComplexMatrix zz = oracle::pauli_string("ZZ");
    for (int k = 0; k <= 10; ++k) {
        const double t = k / 10.0;
        const ComplexMatrix expected = h0 + 0.4 * std::cos(2.0 * kPi * t) * zz;
        EXPECT_LE(max_abs(td.at(t) - expected), 1e-15) << t;
    }
    for (int k = 0; k <= 24; ++k) {
        const ComplexMatrix h = td.at(k / 24.0);
        EXPECT_LE(max_abs(h - h.adjoint()), 1e-15);
    }
}

TEST(Floquet, FullPeriodLeavesStaticPart) {
    const auto td = bundled("floquet");
    for (std::size_t i = 0; i < td.size(); ++i) {
        const auto &c = td.term(i).coeff;
        if (c.kind() == CoefficientFn::Kind::trig && c.trig_m() != 0) {
            EXPECT_NEAR(std::abs(coeff_integral(c, 1.0)), 0.0, 1e-15);
        }
    }
    const ComplexMatrix static_part = oracle::taylor_expm(0.3 * oracle::pauli_string("ZI"), 1.0);
    EXPECT_LE(max_abs(oracle::taylor_expm(h_integral(td, 1.0), 1.0) - static_part), 1e-14);
    EXPECT_LE(spectral_norm(reference_propagator(td, 1.0, 2000) - static_part), 1e-6);
}

TEST(Floquet, TimePairsCommute) {
    const auto td = bundled("floquet");
    const auto report = check_commuting(td);
    EXPECT_TRUE(report.pass);
    for (int a = 0; a < 5; ++a) {
        for (int b = 0; b < 5; ++b) {
            const ComplexMatrix h1 = td.at(a / 4.0), h2 = td.at(b / 4.0 * 0.9);
            EXPECT_LE(max_abs(h1 * h2 - h2 * h1), 1e-9);
        }
    }
}

TEST(Floquet, Errors) {
    const ComplexMatrix zz = 0.2 * oracle::pauli_string("ZZ");
    const ComplexMatrix zi = 0.3 * oracle::pauli_string("ZI");
    const ComplexMatrix xi = 0.2 * oracle::pauli_string("XI");
    // Broken pairing: H_{-1} != H_1^dagger.
    EXPECT_THROW(floquet_hamiltonian(1.0, 1, {{0, zi}, {1, zz}, {-1, 0.5 * zz}}), ModelError);
    EXPECT_THROW(floquet_hamiltonian(1.0, 1, {{0, zi}, {1, zz}}), ModelError);
    // Noncommuting modes.
    EXPECT_THROW(floquet_hamiltonian(1.0, 1, {{0, zi}, {1, xi}, {-1, xi}}), ModelError);
    EXPECT_THROW(floquet_hamiltonian(1.0, 0, {{0, zi}, {2, zz}, {-2, zz}}), ModelError);
    EXPECT_THROW(floquet_hamiltonian(0.0, 0, {{0, zi}}), ModelError);
    EXPECT_THROW(floquet_hamiltonian(1.0, 0, {}), ModelError);
}

TEST(IsingQuench, ZeroCouplingCommutes) {
    const auto td = ising_quench(3, 0.0, 1.0, {0.2, 0.7}, 0.05, 1e-3);
    EXPECT_TRUE(check_commuting(td).pass);
}

TEST(IsingQuench, CouplingBreaksCommutation) {
    const auto td = ising_quench(3, 1.0, 1.0, {0.2, 0.7}, 0.05, 1e-3);
    const auto report = check_commuting(td);
    EXPECT_FALSE(report.pass);
    EXPECT_GT(report.max_commutator_norm, 1.0);
    EXPECT_GT(report.max_time_pair_norm, 0.0);
}

TEST(IsingQuench, AssembledHamiltonian) {
    const auto td = ising_quench(2, 0.5, 0.8, {0.2, 0.7}, 0.05, 1e-4);
    const ComplexMatrix expected = -0.5 * oracle::pauli_string("ZZ") -
                                   0.8 * (oracle::pauli_string("XI") + oracle::pauli_string("IX"));
    EXPECT_LE(max_abs(td.at(0.45) - expected), 0.8 * 2.0 * 1e-4 + 1e-12);
    EXPECT_LE(max_abs(td.at(0.05) + 0.5 * oracle::pauli_string("ZZ")), 0.8 * 2.0 * 1e-4 + 1e-12);
}

TEST(IsingQuench, Errors) {
    EXPECT_THROW(ising_quench(7, 0.5, 1.0, {0.2, 0.7}, 0.05, 1e-3), ModelError);
    EXPECT_THROW(ising_quench(3, 1.5, 1.0, {0.2, 0.7}, 0.05, 1e-3), ModelError);
    // Transition band wider than the pulse itself.
    EXPECT_THROW(ising_quench(3, 0.5, 1.0, {0.45, 0.55}, 0.2, 1e-3), ModelError);
}

TEST(IsingQuench, ForcedDiscrepancyGrowsWithCoupling) {
    SimulateOptions opts;
    opts.force_noncommuting = true;
    std::vector<double> discrepancy;
    for (double coupling : {0.0, 0.1, 0.5}) {
        const auto td = ising_quench(2, coupling, 1.0, {0.2, 0.7}, 0.05, 1e-3);
        QueryLedger ledger;
        const auto out = simulate_td(td, 1.0, 1e-4, ledger, opts);
        EXPECT_LE(be_verify(out, oracle::taylor_expm(h_integral(td, 1.0), 1.0)), 1e-4);
        const ComplexMatrix ordered = oracle::rk4_propagator([&](double s) { return td.at(s); }, 1.0, 4000);
        discrepancy.push_back(spectral_norm(be_corner(out) - ordered));
    }
    EXPECT_LE(discrepancy[0], 1e-4);
    EXPECT_LT(discrepancy[0], discrepancy[1]);
    EXPECT_LT(discrepancy[1], discrepancy[2]);
}

TEST(ModelSpec, BundledModels) {
    for (const char *name : {"lattice", "floquet", "ising_quench"}) {
        const auto spec = bundled_model(name);
        EXPECT_EQ(spec.name(), name);
        const auto td = build_model(spec);
        EXPECT_EQ(td.system_qubits(), spec.system_qubits());
        EXPECT_EQ(check_commuting(td).pass, spec.expected_commuting()) << name;
    }
    EXPECT_THROW(bundled_model("heisenberg"), ModelError);
}

TEST(ModelSpec, PauliSumMatrix) {
    const ComplexMatrix m = pauli_sum_matrix({{"ZZ", 0.2}, {"XI", -0.1}});
    EXPECT_LE(max_abs(m - (0.2 * oracle::pauli_string("ZZ") - 0.1 * oracle::pauli_string("XI"))), 0.0);
}

}  // namespace
