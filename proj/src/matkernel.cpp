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

#include "tdqsp/matkernel.hpp"

#include <cmath>

#include "tdqsp/errors.hpp"

namespace tdqsp {

bool is_square(const ComplexMatrix &a) { return a.rows() == a.cols() && a.rows() >= 1; }

bool is_finite(const ComplexMatrix &a) { return a.allFinite(); }

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!is_square(a)) {
        return false;
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (!is_square(a)) {
        return false;
    }
    ComplexMatrix g = a.adjoint() * a;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix identity(Eigen::Index dim) { return ComplexMatrix::Identity(dim, dim); }

void require_valid(const ComplexMatrix &a, const char *who) {
    if (!is_square(a)) {
        throw ContractViolation(std::string(who) + ": matrix must be square and non-empty");
    }
    if (!is_finite(a)) {
        throw ContractViolation(std::string(who) + ": matrix has non-finite entries");
    }
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b, std::size_t dim_cap) {
    const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
    const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
    if (rows > dim_cap || cols > dim_cap) {
        throw SizingError("kron: result dimension " + std::to_string(rows) + " exceeds cap " +
                          std::to_string(dim_cap));
    }
    ComplexMatrix out(rows, cols);
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

namespace {

Pauli parse_pauli(char c) {
    switch (c) {
        case 'I':
        case 'i':
            return Pauli::I;
        case 'X':
        case 'x':
            return Pauli::X;
        case 'Y':
        case 'y':
            return Pauli::Y;
        case 'Z':
        case 'z':
            return Pauli::Z;
        default:
            throw DomainError(std::string("PauliString: unknown label '") + c + "'");
    }
}

}  // namespace

PauliString::PauliString(std::string_view labels) {
    if (labels.empty()) {
        throw DomainError("PauliString: needs at least one site");
    }
    ops_.reserve(labels.size());
    for (char c : labels) {
        ops_.push_back(parse_pauli(c));
    }
}

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw DomainError("PauliString: needs at least one site");
    }
}

PauliString PauliString::identity(std::size_t n_sites) { return PauliString(std::vector<Pauli>(n_sites, Pauli::I)); }

PauliString PauliString::single(std::size_t n_sites, std::size_t site, Pauli p) {
    return identity(n_sites).with(site, p);
}

PauliString PauliString::with(std::size_t site, Pauli p) const {
    auto ops = ops_;
    ops.at(site) = p;
    return PauliString(std::move(ops));
}

std::string PauliString::str() const {
    std::string s;
    s.reserve(ops_.size());
    for (Pauli p : ops_) {
        s.push_back(static_cast<char>(p));
    }
    return s;
}

std::size_t PauliString::anticommuting_sites(const PauliString &other) const {
    if (other.n_sites() != n_sites()) {
        throw DimensionError("PauliString: site counts differ");
    }
    std::size_t count = 0;
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        if (ops_[k] != Pauli::I && other.ops_[k] != Pauli::I && ops_[k] != other.ops_[k]) {
            ++count;
        }
    }
    return count;
}

ComplexMatrix pauli_matrix(Pauli p) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (p) {
        case Pauli::I:
            m(0, 0) = 1.0;
            m(1, 1) = 1.0;
            break;
        case Pauli::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Pauli::Y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case Pauli::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

ComplexMatrix pauli_matrix(const PauliString &p, std::size_t dim_cap) {
    if (p.n_sites() >= 63 || (std::size_t{1} << p.n_sites()) > dim_cap) {
        throw SizingError("pauli_matrix: " + std::to_string(p.n_sites()) + " sites exceed the dimension cap");
    }
    ComplexMatrix out = pauli_matrix(p[0]);
    for (std::size_t k = 1; k < p.n_sites(); ++k) {
        out = kron(out, pauli_matrix(p[k]), dim_cap);
    }
    return out;
}

HermitianEigen eig_hermitian(const ComplexMatrix &h) {
    require_valid(h, "eig_hermitian");
    if (!is_hermitian(h, kStructuralTol)) {
        throw ContractViolation("eig_hermitian: input is not Hermitian");
    }
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("eig_hermitian: eigensolver failed", 0.0);
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix expm_i(const ComplexMatrix &h, double t) { return expm_i(h, Complex(t, 0.0)); }

ComplexMatrix expm_i(const ComplexMatrix &h, Complex z) {
    const auto eig = eig_hermitian(h);
    return spectral_apply(eig, [z](double w) { return std::exp(-kI * z * w); });
}

double spectral_norm(const ComplexMatrix &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    if (a.size() == 1) {
        return std::abs(a(0, 0));
    }
    Eigen::BDCSVD<ComplexMatrix> svd(a);
    return svd.singularValues()(0);
}

ComplexMatrix polar_unitary(const ComplexMatrix &a) {
    require_valid(a, "polar_unitary");
    Eigen::BDCSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace tdqsp
