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

#include <vector>

#include "tdqsp/chebyshev.hpp"
#include "tdqsp/matkernel.hpp"

namespace tdqsp {

/// Rotation angles (theta_0, ..., theta_k) of a signal-processing sequence.
class PhaseSequence {
   public:
    explicit PhaseSequence(std::vector<double> angles);

    /// Number of signal-operator factors k.
    int degree() const noexcept { return static_cast<int>(angles_.size()) - 1; }
    const std::vector<double> &angles() const noexcept { return angles_; }
    double operator[](std::size_t j) const { return angles_.at(j); }
    /// Every angle negated; realizes the complex-conjugate polynomial.
    PhaseSequence negated() const;

   private:
    std::vector<double> angles_;
};

/// W(x) = exp(i arccos(x) X) = [[x, i sqrt(1-x^2)], [i sqrt(1-x^2), x]].
ComplexMatrix signal_w(double x);

/// exp(i theta_0 Z) * prod_{j=1..k} [W(x) exp(i theta_j Z)].
///
/// The top-left entry P(x) is a polynomial of degree k with parity k mod 2.
ComplexMatrix apply_phases(const PhaseSequence &phi, double x);

/// Re of the top-left entry of apply_phases; the polynomial a phase sequence realizes.
double realized_value(const PhaseSequence &phi, double x);

/// Max |Re P_phi(x_j) - target(x_j)| over x_j = cos(j pi / (2d)), j = 0..2d.
double phase_residual(const PhaseSequence &phi, const ChebyshevPoly &target);

struct PhaseSolverOptions {
    int max_iterations = 100;
    /// Continuation steps tried when plain Newton stalls.
    std::vector<double> continuation{0.5, 0.75, 0.9, 0.97, 0.99, 0.998, 1.0};
};

/// Symmetric phases whose realized polynomial Re P matches a real target of
/// definite parity to within `tol` at the Chebyshev nodes cos(j pi / (2d)).
///
/// Throws ParityError for targets without parity, DomainError for complex or
/// unbounded targets and ConvergenceError when Newton and continuation fail.
PhaseSequence find_phases(const ChebyshevPoly &target, double tol, const PhaseSolverOptions &opts = {});

/// J_0(t) .. J_{n_max}(t) by Miller's backward recurrence, normalized with
/// J_0 + 2 sum_k J_{2k} = 1.
std::vector<double> bessel_j_sequence(int n_max, double t);

struct JacobiAnger {
    ChebyshevPoly cos_part;  // even, ~ cos(t x)
    ChebyshevPoly sin_part;  // odd, ~ sin(t x)
    int degree = 0;          // truncation degree: max(deg cos_part, deg sin_part)
    double tail_bound = 0.0; // 2 * sum of dropped |J_k|
};

/// Truncated Jacobi-Anger expansion of cos(t x) and sin(t x) on [-1,1].
JacobiAnger jacobi_anger(double t_eff, double eps);

/// Even polynomial that is ~1 on [-t+delta, t-delta], ~0 beyond t+delta and
/// bounded by 1 on [-1,1]; band membership is verified before returning.
ChebyshevPoly rect_poly(double t, double delta, double eps);

/// Odd polynomial bounded by 1 on [-1,1] within eps of (2/pi) arcsin(x) for |x| <= 1 - margin,
/// margin in (0, 1/2].
ChebyshevPoly arcsin_poly(double eps, double margin);

}  // namespace tdqsp
