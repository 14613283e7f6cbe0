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

#include "tdqsp/blockenc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "tdqsp/errors.hpp"

namespace tdqsp {

namespace {

constexpr double kPi = std::numbers::pi;
// Re-unitarization is refused when the corner is this far from any unitary.
constexpr double kMaxPolarDeviation = 0.25;

int qubits_for_dim(Eigen::Index dim) {
    int q = 0;
    while ((Eigen::Index{1} << q) < dim) ++q;
    return q;
}

void check_dim(int qubits, const char *who) {
    if (qubits >= 62 || (std::size_t{1} << qubits) > kDefaultDimCap) {
        throw SizingError(std::string(who) + ": " + std::to_string(qubits) + " qubits exceed the dimension cap");
    }
}

// Sup-norm error of the realized polynomial given its residual at the 2d+1
// Chebyshev extrema, plus a roundoff allowance for d matrix products.
double phase_error_bound(double residual, int degree) {
    const double lebesgue = 1.0 + (2.0 / kPi) * std::log(2.0 * degree + 2.0);
    return lebesgue * residual + 1e-13 * (degree + 1);
}

// Average of the sequences for phi and -phi, controlled on a fresh top qubit:
// (H (x) I) (|0><0| (x) Mp + |1><1| (x) Mm) (H (x) I).
ComplexMatrix real_part_combiner(const ComplexMatrix &mp, const ComplexMatrix &mm) {
    const Eigen::Index n = mp.rows();
    ComplexMatrix v(2 * n, 2 * n);
    v.topLeftCorner(n, n) = 0.5 * (mp + mm);
    v.bottomRightCorner(n, n) = v.topLeftCorner(n, n);
    v.topRightCorner(n, n) = 0.5 * (mp - mm);
    v.bottomLeftCorner(n, n) = v.topRightCorner(n, n);
    return v;
}

// Unitary whose first column is `col` (unit norm), completed by Gram-Schmidt
// over the standard basis in index order.
ComplexMatrix complete_to_unitary(const Eigen::VectorXcd &col) {
    const Eigen::Index n = col.size();
    ComplexMatrix v = ComplexMatrix::Zero(n, n);
    v.col(0) = col;
    Eigen::Index filled = 1;
    for (Eigen::Index e = 0; e < n && filled < n; ++e) {
        Eigen::VectorXcd cand = Eigen::VectorXcd::Unit(n, e);
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index k = 0; k < filled; ++k) {
                cand -= v.col(k).dot(cand) * v.col(k);
            }
        }
        const double nrm = cand.norm();
        if (nrm > 1e-8) {
            v.col(filled++) = cand / nrm;
        }
    }
    return v;
}

// Full Gram check up to kFullCheckDim; above it, U^dagger U v = v on fixed
// pseudo-random probes (a necessary condition, O(n^2) per probe).
constexpr Eigen::Index kFullCheckDim = 256;

bool passes_unitarity_check(const ComplexMatrix &u) {
    const Eigen::Index n = u.rows();
    if (n <= kFullCheckDim) {
        return is_unitary(u, kStructuralTol);
    }
    if (!is_square(u) || !is_finite(u)) {
        return false;
    }
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    for (int probe = 0; probe < 4; ++probe) {
        Eigen::VectorXcd v(n);
        for (Eigen::Index k = 0; k < n; ++k) v[k] = Complex(gauss(rng), gauss(rng));
        v.normalize();
        const Eigen::VectorXcd back = u.adjoint() * (u * v);
        if ((back - v).cwiseAbs().maxCoeff() > kStructuralTol * std::sqrt(static_cast<double>(n))) {
            return false;
        }
    }
    return true;
}

double poly_lipschitz(const ChebyshevPoly &p) { return grid_sup(p.derivative(), 2001) * (1.0 + 1e-6); }

}  // namespace

BlockEncoding::BlockEncoding(ComplexMatrix unitary, int system_qubits, int ancilla_qubits, double scale, double err)
    : unitary_(std::move(unitary)),
      system_qubits_(system_qubits),
      ancilla_qubits_(ancilla_qubits),
      scale_(scale),
      err_(err) {
    if (system_qubits_ < 0 || ancilla_qubits_ < 0) {
        throw DimensionError("BlockEncoding: qubit counts must be non-negative");
    }
    check_dim(system_qubits_ + ancilla_qubits_, "BlockEncoding");
    const Eigen::Index dim = Eigen::Index{1} << (system_qubits_ + ancilla_qubits_);
    if (unitary_.rows() != dim || unitary_.cols() != dim) {
        throw DimensionError("BlockEncoding: unitary dimension does not match 2^(s+a)");
    }
    if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
        throw DomainError("BlockEncoding: scale must be positive");
    }
    if (!(err_ >= 0.0)) {
        throw DomainError("BlockEncoding: err must be non-negative");
    }
    if (!passes_unitarity_check(unitary_)) {
        throw ContractViolation("BlockEncoding: matrix is not unitary");
    }
}

BlockEncoding::BlockEncoding(Validated, ComplexMatrix unitary, int system_qubits, int ancilla_qubits, double scale,
                             double err)
    : unitary_(std::move(unitary)),
      system_qubits_(system_qubits),
      ancilla_qubits_(ancilla_qubits),
      scale_(scale),
      err_(err) {
    if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
        throw DomainError("BlockEncoding: scale must be positive");
    }
    if (!(err_ >= 0.0)) {
        throw DomainError("BlockEncoding: err must be non-negative");
    }
}

ComplexMatrix BlockEncoding::block() const { return unitary_.topLeftCorner(system_dim(), system_dim()); }

BlockEncoding BlockEncoding::rescaled(double factor) const {
    return BlockEncoding(Validated{}, unitary_, system_qubits_, ancilla_qubits_, scale_ * factor, err_ * factor);
}

BlockEncoding BlockEncoding::with_err(double err) const {
    return BlockEncoding(Validated{}, unitary_, system_qubits_, ancilla_qubits_, scale_, err);
}

void QueryLedger::note(const BlockEncoding &be) { ancillas_peak = std::max(ancillas_peak, be.ancilla_qubits()); }

BlockEncoding be_from_unitary(const ComplexMatrix &u) {
    require_valid(u, "be_from_unitary");
    if (!is_unitary(u, kStructuralTol)) {
        throw ContractViolation("be_from_unitary: matrix is not unitary");
    }
    const int q = qubits_for_dim(u.rows());
    if ((Eigen::Index{1} << q) != u.rows()) {
        throw DimensionError("be_from_unitary: dimension is not a power of two");
    }
    return BlockEncoding(u, q, 0, 1.0, 0.0);
}

ComplexMatrix be_corner(const BlockEncoding &be) { return be.scale() * be.block(); }

double be_verify(const BlockEncoding &be, const ComplexMatrix &target) {
    if (target.rows() != be.system_dim() || target.cols() != be.system_dim()) {
        throw DimensionError("be_verify: target dimension does not match the encoded system");
    }
    return spectral_norm(target - be_corner(be));
}

BlockEncoding be_scalar(const ChebyshevPoly &alpha_poly, double t, QueryLedger *ledger, double phase_tol) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("be_scalar: t must lie in [0, 1]");
    }
    const auto phi = find_phases(alpha_poly, phase_tol);
    const ComplexMatrix v = real_part_combiner(apply_phases(phi, t), apply_phases(phi.negated(), t));
    BlockEncoding out(v, 0, 2, 1.0, phase_error_bound(phase_residual(phi, alpha_poly), phi.degree()));
    if (ledger) {
        ledger->w_gate_uses += phi.degree();
        ledger->note(out);
    }
    return out;
}

BlockEncoding be_scale_mul(const BlockEncoding &scalar, const BlockEncoding &op, QueryLedger *ledger) {
    if (scalar.system_qubits() != 0) {
        throw DimensionError("be_scale_mul: scalar encoding must have zero system qubits");
    }
    check_dim(scalar.ancilla_qubits() + op.ancilla_qubits() + op.system_qubits(), "be_scale_mul");
    BlockEncoding out(kron(scalar.unitary(), op.unitary()), op.system_qubits(),
                      scalar.ancilla_qubits() + op.ancilla_qubits(), scalar.scale() * op.scale(),
                      scalar.scale() * op.err() + op.scale() * scalar.err() + scalar.err() * op.err());
    if (ledger) {
        ledger->encoding_uses += 2;
        ledger->note(out);
    }
    return out;
}

BlockEncoding be_lcu(const std::vector<BlockEncoding> &terms, const std::vector<Complex> &weights,
                     QueryLedger *ledger) {
    if (terms.empty() || terms.size() != weights.size()) {
        throw DimensionError("be_lcu: need one weight per term and at least one term");
    }
    const int s = terms.front().system_qubits();
    int a_max = 0;
    for (const auto &t : terms) {
        if (t.system_qubits() != s) {
            throw DimensionError("be_lcu: terms act on different system sizes");
        }
        a_max = std::max(a_max, t.ancilla_qubits());
    }
    const auto m = static_cast<Eigen::Index>(terms.size());
    const int r = qubits_for_dim(m);
    check_dim(s + a_max + r, "be_lcu");

    double total = 0.0;
    double err = 0.0;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        total += std::abs(weights[j]) * terms[j].scale();
        err += std::abs(weights[j]) * terms[j].err();
    }
    if (!(total > 0.0)) {
        throw DomainError("be_lcu: weights are all zero");
    }

    const Eigen::Index reg = Eigen::Index{1} << r;
    const Eigen::Index d = Eigen::Index{1} << (s + a_max);
    std::vector<ComplexMatrix> select;
    select.reserve(static_cast<std::size_t>(reg));
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(reg);
    for (Eigen::Index j = 0; j < reg; ++j) {
        if (j < m) {
            const auto &t = terms[static_cast<std::size_t>(j)];
            const Complex w = weights[static_cast<std::size_t>(j)];
            const Complex phase = std::abs(w) > 0.0 ? w / std::abs(w) : Complex(1.0);
            const Eigen::Index pad = Eigen::Index{1} << (a_max - t.ancilla_qubits());
            select.push_back(phase * (pad == 1 ? t.unitary() : kron(identity(pad), t.unitary())));
            amp[j] = std::sqrt(std::abs(w) * t.scale() / total);
        } else {
            select.push_back(identity(d));
        }
    }
    const ComplexMatrix prep = complete_to_unitary(amp);

    // (prep^dagger (x) I) * SELECT * (prep (x) I), assembled blockwise.
    ComplexMatrix u = ComplexMatrix::Zero(reg * d, reg * d);
    for (Eigen::Index j = 0; j < reg; ++j) {
        for (Eigen::Index k = 0; k < reg; ++k) {
            auto blk = u.block(j * d, k * d, d, d);
            for (Eigen::Index l = 0; l < reg; ++l) {
                const Complex c = std::conj(prep(l, j)) * prep(l, k);
                if (c != Complex(0.0)) {
                    blk += c * select[static_cast<std::size_t>(l)];
                }
            }
        }
    }
    BlockEncoding out(std::move(u), s, a_max + r, total, err);
    if (ledger) {
        ledger->encoding_uses += static_cast<long>(m);
        ledger->note(out);
    }
    return out;
}

BlockEncoding be_product(const BlockEncoding &a, const BlockEncoding &b, QueryLedger *ledger) {
    if (a.system_qubits() != b.system_qubits()) {
        throw DimensionError("be_product: operands act on different system sizes");
    }
    const int s = a.system_qubits();
    check_dim(s + a.ancilla_qubits() + b.ancilla_qubits(), "be_product");
    const Eigen::Index sd = Eigen::Index{1} << s;
    const Eigen::Index na = Eigen::Index{1} << a.ancilla_qubits();
    const Eigen::Index nb = Eigen::Index{1} << b.ancilla_qubits();

    // Layout [anc_a][anc_b][system]; b's unitary acts on the low bits, a's skips anc_b.
    const ComplexMatrix ub = na == 1 ? b.unitary() : kron(identity(na), b.unitary());
    ComplexMatrix ua = ComplexMatrix::Zero(na * nb * sd, na * nb * sd);
    for (Eigen::Index ha = 0; ha < na; ++ha) {
        for (Eigen::Index ha2 = 0; ha2 < na; ++ha2) {
            const auto src = a.unitary().block(ha * sd, ha2 * sd, sd, sd);
            for (Eigen::Index hb = 0; hb < nb; ++hb) {
                ua.block((ha * nb + hb) * sd, (ha2 * nb + hb) * sd, sd, sd) = src;
            }
        }
    }
    BlockEncoding out(ua * ub, s, a.ancilla_qubits() + b.ancilla_qubits(), a.scale() * b.scale(),
                      a.scale() * b.err() + b.scale() * a.err() + a.err() * b.err());
    if (ledger) {
        ledger->encoding_uses += 2;
        ledger->note(out);
    }
    return out;
}

namespace {

struct QsvtPlan {
    PhaseSequence phases;
    double err;
};

QsvtPlan plan_qsvt(const BlockEncoding &be, const ChebyshevPoly &poly, const QsvtOptions &opts) {
    if (poly.parity() == Parity::none) {
        throw ParityError("qsvt_apply: polynomial has no definite parity");
    }
    check_dim(be.system_qubits() + be.ancilla_qubits() + 1, "qsvt_apply");
    if (!is_hermitian(be.block(), opts.hermitian_tol)) {
        throw ContractViolation("qsvt_apply: encoded block is not Hermitian");
    }
    auto phi = find_phases(poly, opts.phase_tol);
    const double err = poly_lipschitz(poly) * be.err() / be.scale() +
                       phase_error_bound(phase_residual(phi, poly), phi.degree());
    return {std::move(phi), err};
}

// M * cols for the alternating sequence
//   M = i^d D(psi_0) X_1 D(psi_1) ... X_d D(psi_d),
// D(psi) = exp(i psi) on the encoded block rows and exp(-i psi) elsewhere,
// X_j = U when d - j is even and U^dagger otherwise. The signal-processing
// phases map onto reflections through W(x) = i exp(-i pi/4 Z) R(x) exp(-i pi/4 Z).
ComplexMatrix qsvt_sequence(const BlockEncoding &be, const ComplexMatrix &u_dag, const PhaseSequence &p,
                            ComplexMatrix cols) {
    const ComplexMatrix &u = be.unitary();
    const Eigen::Index n = u.rows();
    const Eigen::Index sd = be.system_dim();
    const int d = p.degree();
    std::vector<double> psi(p.angles());
    if (d >= 1) {
        psi.front() -= kPi / 4.0;
        psi.back() -= kPi / 4.0;
        for (int j = 1; j < d; ++j) psi[static_cast<std::size_t>(j)] -= kPi / 2.0;
    }
    auto reflect = [&](double angle) {
        cols.topRows(sd) *= std::polar(1.0, angle);
        cols.bottomRows(n - sd) *= std::polar(1.0, -angle);
    };
    reflect(psi[static_cast<std::size_t>(d)]);
    for (int j = d; j >= 1; --j) {
        cols = ((d - j) % 2 == 0 ? u : u_dag) * cols;
        reflect(psi[static_cast<std::size_t>(j - 1)]);
    }
    return cols * std::pow(kI, d);
}

}  // namespace

BlockEncoding qsvt_apply(const BlockEncoding &be, const ChebyshevPoly &poly, QueryLedger *ledger,
                         const QsvtOptions &opts) {
    const auto plan = plan_qsvt(be, poly, opts);
    const ComplexMatrix u_dag = be.unitary().adjoint();
    const Eigen::Index n = be.unitary().rows();
    const ComplexMatrix v = real_part_combiner(qsvt_sequence(be, u_dag, plan.phases, identity(n)),
                                               qsvt_sequence(be, u_dag, plan.phases.negated(), identity(n)));
    BlockEncoding out(v, be.system_qubits(), be.ancilla_qubits() + 1, 1.0, plan.err);
    if (ledger) {
        ledger->encoding_uses += plan.phases.degree();
        ledger->note(out);
    }
    return out;
}

BlockEncoding be_log_unitary(const ComplexMatrix &u, double eps, QueryLedger *ledger) {
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw DomainError("be_log_unitary: eps must lie in (0, 1/2]");
    }
    constexpr double kMargin = 0.5;
    const auto enc = be_from_unitary(u);
    const auto enc_dag = be_from_unitary(u.adjoint());
    // (U^dagger - U) / 2i = sin(H) for U = exp(-iH).
    const auto sin_enc = be_lcu({enc, enc_dag}, {Complex(0.0, 0.5), Complex(0.0, -0.5)}, ledger);
    if (spectral_norm(be_corner(sin_enc)) > 1.0 - kMargin) {
        throw MarginError("be_log_unitary: spectrum of sin(H) too close to +-1 (||H|| > 1/2)");
    }
    const double arcsin_eps = 0.9 * (2.0 / kPi) * eps;
    const auto poly = arcsin_poly(arcsin_eps, kMargin);
    const auto h_enc = qsvt_apply(sin_enc, poly, ledger);
    // Block ~ (2/pi) H; reading it at scale pi^2/4 gives a corner ~ (pi/2) H.
    const double scale = kPi * kPi / 4.0;
    BlockEncoding out(h_enc.unitary(), h_enc.system_qubits(), h_enc.ancilla_qubits(), scale,
                      scale * (arcsin_eps + h_enc.err()));
    if (ledger) {
        ledger->degrees["log_unitary"] = std::max(ledger->degrees["log_unitary"], poly.degree());
        ledger->note(out);
    }
    return out;
}

BlockEncoding be_simulate(const BlockEncoding &be, double t, double eps, QueryLedger *ledger,
                          const QsvtOptions &opts) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("be_simulate: t must be finite and non-negative");
    }
    if (!(eps > 0.0 && eps < 0.5)) {
        throw DomainError("be_simulate: eps must lie in (0, 1/2)");
    }
    if (t == 0.0) {
        return be_from_unitary(identity(be.system_dim()));
    }
    const double t_eff = be.scale() * t;
    const auto ja = jacobi_anger(t_eff, eps / 4.0);
    if (ledger) {
        ledger->degrees["jacobi_anger"] = ja.degree;
    }
    constexpr double kHeadroom = 1.0 - 1e-3;
    const double peak = std::max(ja.cos_part.sup_bound(), ja.sin_part.sup_bound());
    const double kappa = peak > kHeadroom ? kHeadroom / peak : 1.0;

    // Input error is propagated once, through exp itself, rather than through both halves.
    // Only the corners of the two QSVT encodings and of their LCU feed the
    // polar step, so the sequences are applied to the encoded block's columns
    // alone; the ledger is charged as for the full constructions.
    const auto exact = be.with_err(0.0);
    const ComplexMatrix u_dag = exact.unitary().adjoint();
    const Eigen::Index sd = exact.system_dim();
    const ComplexMatrix cols = identity(exact.unitary().rows()).leftCols(sd);
    auto qsvt_corner = [&](const ChebyshevPoly &poly, double &err) {
        const auto plan = plan_qsvt(exact, poly, opts);
        err = plan.err;
        const ComplexMatrix plus = qsvt_sequence(exact, u_dag, plan.phases, cols);
        const ComplexMatrix minus = qsvt_sequence(exact, u_dag, plan.phases.negated(), cols);
        if (ledger) {
            ledger->encoding_uses += plan.phases.degree();
            ledger->ancillas_peak = std::max(ledger->ancillas_peak, exact.ancilla_qubits() + 1);
        }
        return ComplexMatrix(0.5 * (plus.topRows(sd) + minus.topRows(sd)));
    };
    double err_cos = 0.0;
    double err_sin = 0.0;
    const ComplexMatrix cos_block = qsvt_corner(ja.cos_part.scaled(kappa), err_cos);
    const ComplexMatrix sin_block = qsvt_corner(ja.sin_part.scaled(kappa), err_sin);
    // LCU of the two (scale 1/kappa each) with weights (1, -i).
    const ComplexMatrix corner = (cos_block - kI * sin_block) / kappa;
    const double combined_err = (err_cos + err_sin) / kappa;
    if (ledger) {
        ledger->encoding_uses += 2;
        ledger->ancillas_peak = std::max(ledger->ancillas_peak, exact.ancilla_qubits() + 2);
    }

    const ComplexMatrix unitary = polar_unitary(corner);
    const double deviation = spectral_norm(corner - unitary);
    if (deviation > kMaxPolarDeviation) {
        throw ConvergenceError("be_simulate: combined corner is far from unitary (input not a Hermitian encoding?)",
                               deviation);
    }
    const double err = t * be.err() + ja.tail_bound + combined_err + deviation;
    BlockEncoding out(unitary, be.system_qubits(), 0, 1.0, err);
    if (ledger) {
        ledger->reunitarizations += 1;
        ledger->note(out);
    }
    return out;
}

}  // namespace tdqsp
