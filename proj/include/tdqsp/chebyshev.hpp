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

#include <functional>
#include <vector>

#include "tdqsp/matkernel.hpp"

namespace tdqsp {

enum class Parity { even, odd, none };

const char *to_string(Parity p);

/// Magnitude below which a coefficient counts as zero for parity purposes.
inline constexpr double kParityTol = 1e-14;

/// Polynomial on [-1,1] stored in the Chebyshev basis: P(x) = sum_k c_k T_k(x).
///
/// The parity field is a certified claim: constructing an `even` polynomial with
/// an odd-index coefficient above kParityTol throws ParityError. Wrong-parity
/// coefficients below the threshold are stored as exact zeros, so an even
/// polynomial satisfies P(x) == P(-x) bit for bit.
class ChebyshevPoly {
   public:
    ChebyshevPoly();
    explicit ChebyshevPoly(std::vector<Complex> coeffs);
    ChebyshevPoly(std::vector<Complex> coeffs, Parity declared);

    static ChebyshevPoly monomial_x();
    static ChebyshevPoly constant(Complex c);
    /// T_k as a polynomial.
    static ChebyshevPoly basis(int k);

    const std::vector<Complex> &coeffs() const noexcept { return coeffs_; }
    Parity parity() const noexcept { return parity_; }
    /// Max |P| over a 2001-point Chebyshev grid (superset of the 1001-point grid).
    double sup_bound() const noexcept { return sup_bound_; }
    /// Index of the highest non-zero coefficient (0 for the zero polynomial).
    int degree() const noexcept;
    bool is_zero() const noexcept;
    bool is_real(double tol = kParityTol) const noexcept;

    Complex operator()(double x) const;

    ChebyshevPoly scaled(Complex s) const;
    ChebyshevPoly operator+(const ChebyshevPoly &o) const;
    ChebyshevPoly operator-(const ChebyshevPoly &o) const;
    ChebyshevPoly even_part() const;
    ChebyshevPoly odd_part() const;
    ChebyshevPoly real_part() const;
    ChebyshevPoly imag_part() const;
    ChebyshevPoly derivative() const;
    /// Antiderivative that vanishes at `x0`.
    ChebyshevPoly antiderivative(double x0 = 0.0) const;
    /// Drops trailing coefficients whose magnitudes sum to at most `tol`.
    ChebyshevPoly truncated(double tol) const;

   private:
    std::vector<Complex> coeffs_;
    Parity parity_ = Parity::even;
    double sup_bound_ = 0.0;

    void finish(Parity declared, bool declared_explicitly);
};

/// Parity certified by the coefficients at tolerance `tol`.
Parity detect_parity(const std::vector<Complex> &coeffs, double tol = kParityTol);

/// Points cos(j*pi/(n-1)), j = 0..n-1.
std::vector<double> chebyshev_grid(int n);

/// max_j |P(x_j)| over chebyshev_grid(n).
double grid_sup(const ChebyshevPoly &p, int n = 2001);

/// max over an n-point uniform grid on [lo, hi] of |P(x) - f(x)|.
double grid_error(const ChebyshevPoly &p, const std::function<Complex(double)> &f, int n = 2001, double lo = -1.0,
                  double hi = 1.0);

/// Chebyshev interpolant of `f` at `degree + 1` first-kind Chebyshev points.
///
/// With a parity hint the off-parity coefficients are zeroed when they are
/// negligible relative to the fit; otherwise parity is auto-detected.
ChebyshevPoly cheb_fit(const std::function<Complex(double)> &f, int degree, Parity hint = Parity::none);

}  // namespace tdqsp
