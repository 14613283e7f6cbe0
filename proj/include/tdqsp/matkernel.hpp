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

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace tdqsp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Largest matrix dimension any constructor in the library will materialize.
inline constexpr std::size_t kDefaultDimCap = std::size_t{1} << 14;

/// Default tolerance for structural predicates (Hermitian, unitary).
inline constexpr double kStructuralTol = 1e-10;

inline constexpr Complex kI{0.0, 1.0};

bool is_square(const ComplexMatrix &a);
bool is_finite(const ComplexMatrix &a);
bool is_hermitian(const ComplexMatrix &a, double tol = kStructuralTol);
bool is_unitary(const ComplexMatrix &a, double tol = kStructuralTol);

ComplexMatrix identity(Eigen::Index dim);

/// Throws ContractViolation unless `a` is square, non-empty and finite.
void require_valid(const ComplexMatrix &a, const char *who);

/// Kronecker product; entry (i*db+k, j*db+l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t dim_cap = kDefaultDimCap);

/// a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-site Pauli operators, site 0 leftmost (most significant).
class PauliString {
   public:
    explicit PauliString(std::string_view labels);
    explicit PauliString(std::vector<Pauli> ops);

    static PauliString identity(std::size_t n_sites);
    /// `n_sites` identity with `p` placed at `site`.
    static PauliString single(std::size_t n_sites, std::size_t site, Pauli p);

    std::size_t n_sites() const noexcept { return ops_.size(); }
    const std::vector<Pauli> &ops() const noexcept { return ops_; }
    Pauli operator[](std::size_t site) const { return ops_.at(site); }
    PauliString with(std::size_t site, Pauli p) const;
    std::string str() const;

    /// Number of sites where both strings carry distinct non-identity Paulis.
    std::size_t anticommuting_sites(const PauliString &other) const;
    bool commutes_with(const PauliString &other) const { return anticommuting_sites(other) % 2 == 0; }

    bool operator==(const PauliString &) const = default;

   private:
    std::vector<Pauli> ops_;
};

ComplexMatrix pauli_matrix(Pauli p);
ComplexMatrix pauli_matrix(const PauliString &p, std::size_t dim_cap = kDefaultDimCap);

struct HermitianEigen {
    RealVector values;     // ascending
    ComplexMatrix vectors; // columns are eigenvectors
};

HermitianEigen eig_hermitian(const ComplexMatrix &h);

/// V * diag(f(w)) * V^dagger for a Hermitian eigensystem.
template <typename F>
ComplexMatrix spectral_apply(const HermitianEigen &eig, F &&f) {
    Eigen::VectorXcd d(eig.values.size());
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        d[k] = Complex(f(eig.values[k]));
    }
    return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

/// exp(-i t h) for Hermitian h.
ComplexMatrix expm_i(const ComplexMatrix &h, double t);

/// exp(-i z h) for Hermitian h and complex z; unitary only when z is real.
ComplexMatrix expm_i(const ComplexMatrix &h, Complex z);

/// Largest singular value.
double spectral_norm(const ComplexMatrix &a);

/// Nearest unitary in every unitarily invariant norm (U V^dagger from the SVD).
ComplexMatrix polar_unitary(const ComplexMatrix &a);

}  // namespace tdqsp
