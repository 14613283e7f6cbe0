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

#include <numbers>

#include "oracles.hpp"
#include "tdqsp/errors.hpp"
#include "tdqsp/matkernel.hpp"

namespace {

using namespace tdqsp;

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

TEST(Kron, IdentityTimesIdentity) { EXPECT_EQ(kron(identity(2), identity(2)), identity(4)); }

TEST(Kron, XTensorZ) {
    ComplexMatrix expected(4, 4);
    expected << 0, 0, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, -1, 0, 0;
    EXPECT_EQ(kron(pauli_matrix(Pauli::X), pauli_matrix(Pauli::Z)), expected);
}

TEST(Kron, MatchesIndexLoops) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = oracle::random_matrix(2, rng);
        const auto b = oracle::random_matrix(2 + trial % 3, rng);
        EXPECT_EQ(kron(a, b), oracle::kron_loops(a, b));
    }
}

TEST(Kron, Associative) {
    std::mt19937_64 rng(12);
    const auto a = oracle::random_matrix(2, rng), b = oracle::random_matrix(3, rng), c = oracle::random_matrix(2, rng);
    const ComplexMatrix left = kron(kron(a, b), c);
    const ComplexMatrix right = kron(a, kron(b, c));
    // Each entry is the same triple product; only association order of the scalar products differs.
    EXPECT_LE(max_abs(left - right), 1e-15 * max_abs(left));
}

TEST(Kron, DimensionCap) {
    EXPECT_THROW(kron(identity(128), identity(256)), SizingError);
    EXPECT_NO_THROW(kron(identity(4), identity(4), 16));
    EXPECT_THROW(kron(identity(4), identity(8), 16), SizingError);
}

TEST(PauliMatrix, SingleSite) {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    EXPECT_EQ(pauli_matrix(PauliString("X")), x);
}

TEST(PauliMatrix, TwoSitesIsOrderedKron) {
    EXPECT_EQ(pauli_matrix(PauliString("XY")), oracle::kron_loops(oracle::pauli('X'), oracle::pauli('Y')));
}

TEST(PauliMatrix, ChainTermsCommute) {
    const auto c = commutator(pauli_matrix(PauliString("XYI")), pauli_matrix(PauliString("IYZ")));
    EXPECT_LE(max_abs(c), 1e-15);
}

TEST(PauliMatrix, HermitianUnitaryUnitNorm) {
    for (const char *s : {"I", "XZ", "YYX", "ZIXY"}) {
        const auto m = pauli_matrix(PauliString(s));
        EXPECT_TRUE(is_hermitian(m));
        EXPECT_TRUE(is_unitary(m));
        EXPECT_NEAR(spectral_norm(m), 1.0, 1e-12);
    }
}

TEST(PauliString, RejectsBadLabels) {
    EXPECT_THROW(PauliString("XQ"), DomainError);
    EXPECT_THROW(PauliString(""), DomainError);
}

TEST(PauliString, CommutatorNormFollowsAnticommutingSiteParity) {
    const char labels[] = {'I', 'X', 'Y', 'Z'};
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pick(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::string a, b;
        for (int k = 0; k < 3; ++k) {
            a += labels[pick(rng)];
            b += labels[pick(rng)];
        }
        const PauliString pa(a), pb(b);
        const double norm = spectral_norm(commutator(pauli_matrix(pa), pauli_matrix(pb)));
        if (pa.anticommuting_sites(pb) % 2 == 0) {
            EXPECT_LE(norm, 1e-12) << a << " " << b;
            EXPECT_TRUE(pa.commutes_with(pb));
        } else {
            EXPECT_NEAR(norm, 2.0, 1e-12) << a << " " << b;
        }
    }
}

TEST(EigHermitian, Diagonal) {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 3.0;
    const auto e = eig_hermitian(d);
    EXPECT_NEAR(e.values[0], 1.0, 1e-15);
    EXPECT_NEAR(e.values[1], 3.0, 1e-15);
    EXPECT_LE(max_abs(e.vectors.cwiseAbs() - ComplexMatrix::Identity(2, 2).cwiseAbs()), 1e-15);
}

TEST(EigHermitian, PauliX) {
    const auto e = eig_hermitian(pauli_matrix(Pauli::X));
    EXPECT_NEAR(e.values[0], -1.0, 1e-15);
    EXPECT_NEAR(e.values[1], 1.0, 1e-15);
}

TEST(EigHermitian, RandomReconstruction) {
    std::mt19937_64 rng(14);
    const auto h = oracle::random_hermitian(8, rng, 2.0);
    const auto e = eig_hermitian(h);
    const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE(oracle::power_norm(h - back), 1e-9);
    EXPECT_TRUE(is_unitary(e.vectors, 1e-10));
    for (Eigen::Index k = 1; k < e.values.size(); ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
}

TEST(EigHermitian, RejectsNonHermitian) {
    ComplexMatrix a = pauli_matrix(Pauli::X);
    a(0, 1) = 2.0;
    EXPECT_THROW(eig_hermitian(a), ContractViolation);
    EXPECT_THROW(expm_i(a, 1.0), ContractViolation);
}

TEST(ExpmI, ZeroIsIdentity) { EXPECT_LE(max_abs(expm_i(ComplexMatrix::Zero(4, 4), 3.7) - identity(4)), 1e-15); }

TEST(ExpmI, PauliXQuarterTurn) {
    const ComplexMatrix expected = Complex(0.0, -1.0) * pauli_matrix(Pauli::X);
    EXPECT_LE(max_abs(expm_i(pauli_matrix(Pauli::X), std::numbers::pi / 2.0) - expected), 1e-15);
}

TEST(ExpmI, MatchesTaylorOracle) {
    std::mt19937_64 rng(15);
    const auto h = oracle::random_hermitian(4, rng, 1.5);
    const auto u = expm_i(h, 0.7);
    EXPECT_LE(max_abs(u - oracle::taylor_expm(h, 0.7)), 1e-10);
    EXPECT_TRUE(is_unitary(u, 1e-10));
}

TEST(ExpmI, GroupProperty) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 5; ++trial) {
        const auto h = oracle::random_hermitian(6, rng, 3.0);
        EXPECT_LE(max_abs(expm_i(h, 0.4) * expm_i(h, 1.1) - expm_i(h, 1.5)), 1e-9);
    }
}

TEST(ExpmI, ComplexArgumentMatchesTaylor) {
    std::mt19937_64 rng(17);
    const auto h = oracle::random_hermitian(4, rng, 1.0);
    const Complex z(0.3, -0.2);
    EXPECT_LE(max_abs(expm_i(h, z) - oracle::taylor_expm(h, z)), 1e-12);
}

TEST(SpectralNorm, Basics) {
    EXPECT_NEAR(spectral_norm(identity(3)), 1.0, 1e-15);
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = -3.0;
    EXPECT_NEAR(spectral_norm(d), 3.0, 1e-15);
}

TEST(SpectralNorm, MatchesPowerIteration) {
    std::mt19937_64 rng(18);
    const auto a = oracle::random_matrix(6, rng);
    EXPECT_NEAR(spectral_norm(a), oracle::power_norm(a), 1e-8);
}

TEST(Predicates, Tolerances) {
    ComplexMatrix h = pauli_matrix(Pauli::Y);
    EXPECT_TRUE(is_hermitian(h));
    h(0, 1) += 1e-9;
    EXPECT_FALSE(is_hermitian(h));
    EXPECT_TRUE(is_hermitian(h, 1e-8));
    ComplexMatrix bad = identity(2);
    bad(0, 0) = std::nan("");
    EXPECT_FALSE(is_finite(bad));
    EXPECT_THROW(require_valid(bad, "test"), ContractViolation);
}

TEST(PolarUnitary, RecoversUnitaryFromScaledCopy) {
    std::mt19937_64 rng(19);
    const auto u = oracle::random_unitary(4, rng);
    EXPECT_LE(max_abs(polar_unitary(0.5 * u) - u), 1e-13);
}

}  // namespace
