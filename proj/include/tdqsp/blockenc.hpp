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
#include <vector>

#include "tdqsp/chebyshev.hpp"
#include "tdqsp/matkernel.hpp"
#include "tdqsp/qsp.hpp"

namespace tdqsp {

/// A unitary U on (a ancilla + s system) qubits with
/// || A - scale * (<0|^a (x) I) U (|0>^a (x) I) || <= err.
///
/// Ancilla qubits are the most significant ones, so the encoded block is the
/// top-left 2^s x 2^s corner of U.
class BlockEncoding {
   public:
    BlockEncoding(ComplexMatrix unitary, int system_qubits, int ancilla_qubits, double scale, double err);

    const ComplexMatrix &unitary() const noexcept { return unitary_; }
    int system_qubits() const noexcept { return system_qubits_; }
    int ancilla_qubits() const noexcept { return ancilla_qubits_; }
    double scale() const noexcept { return scale_; }
    double err() const noexcept { return err_; }
    Eigen::Index system_dim() const noexcept { return Eigen::Index{1} << system_qubits_; }

    /// Top-left system block of the unitary, without the scale.
    ComplexMatrix block() const;

    /// Same unitary read at scale * factor; the error bound scales with it.
    BlockEncoding rescaled(double factor) const;
    BlockEncoding with_err(double err) const;

   private:
    struct Validated {};
    BlockEncoding(Validated, ComplexMatrix unitary, int system_qubits, int ancilla_qubits, double scale, double err);

    ComplexMatrix unitary_;
    int system_qubits_;
    int ancilla_qubits_;
    double scale_;
    double err_;
};

/// Counters for one pipeline run. Single-owner; parallel runs keep separate ledgers.
struct QueryLedger {
    long w_gate_uses = 0;     // signal-operator W(x) invocations
    long encoding_uses = 0;   // constituent block-encoding applications
    int ancillas_peak = 0;
    long reunitarizations = 0;  // polar re-embeddings performed (classical step, not a circuit)
    std::map<std::string, int> degrees;

    void note(const BlockEncoding &be);
    bool operator==(const QueryLedger &) const = default;
};

BlockEncoding be_from_unitary(const ComplexMatrix &u);

/// scale * top-left block.
ComplexMatrix be_corner(const BlockEncoding &be);

/// Spectral-norm distance between `target` and the encoded corner.
double be_verify(const BlockEncoding &be, const ComplexMatrix &target);

/// 1x1 block encoding of a real bounded definite-parity polynomial evaluated at t.
///
/// The QSP sequence realizes Re P only as the average of the sequences for
/// phi and -phi, so the result carries two qubits: the signal qubit and the
/// averaging control.
BlockEncoding be_scalar(const ChebyshevPoly &alpha_poly, double t, QueryLedger *ledger = nullptr,
                        double phase_tol = 1e-11);

/// Encodes c * A from encodings of a scalar c (s = 0) and an operator A.
BlockEncoding be_scale_mul(const BlockEncoding &scalar, const BlockEncoding &op, QueryLedger *ledger = nullptr);

/// Encodes sum_j w_j A_j with scale sum_j |w_j| scale_j.
BlockEncoding be_lcu(const std::vector<BlockEncoding> &terms, const std::vector<Complex> &weights,
                     QueryLedger *ledger = nullptr);

/// Encodes A * B.
BlockEncoding be_product(const BlockEncoding &a, const BlockEncoding &b, QueryLedger *ledger = nullptr);

struct QsvtOptions {
    double phase_tol = 1e-11;
    double hermitian_tol = 1e-8;
};

/// Encodes P(A / scale) for a block encoding of Hermitian A, with one extra ancilla.
BlockEncoding qsvt_apply(const BlockEncoding &be, const ChebyshevPoly &poly, QueryLedger *ledger = nullptr,
                         const QsvtOptions &opts = {});

/// Corner ~ (pi/2) H from U = exp(-iH), ||H|| <= 1/2, within pi*eps/2.
BlockEncoding be_log_unitary(const ComplexMatrix &u, double eps, QueryLedger *ledger = nullptr);

/// Corner ~ exp(-i A t) (scale 1, no ancillas) within the recorded error.
BlockEncoding be_simulate(const BlockEncoding &be, double t, double eps, QueryLedger *ledger = nullptr,
                          const QsvtOptions &opts = {});

}  // namespace tdqsp
