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

// Independent reference computations for the test suites. Nothing here calls
// the library's numerical routines; only its value types are shared.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "tdqsp/matkernel.hpp"

namespace oracle {

using tdqsp::Complex;
using tdqsp::ComplexMatrix;

inline ComplexMatrix kron_loops(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

inline ComplexMatrix pauli(char c) {
    ComplexMatrix m(2, 2);
    const Complex i(0.0, 1.0);
    switch (c) {
        case 'X':
            m << 0, 1, 1, 0;
            break;
        case 'Y':
            m << 0, -i, i, 0;
            break;
        case 'Z':
            m << 1, 0, 0, -1;
            break;
        default:
            m << 1, 0, 0, 1;
    }
    return m;
}

inline ComplexMatrix pauli_string(const std::string &labels) {
    ComplexMatrix out = ComplexMatrix::Identity(1, 1);
    for (char c : labels) out = kron_loops(out, pauli(c));
    return out;
}

/// exp(-i z h) by scaling and squaring around a truncated Taylor series.
inline ComplexMatrix taylor_expm(const ComplexMatrix &h, Complex z, int terms = 30) {
    const ComplexMatrix a = Complex(0.0, -1.0) * z * h;
    double norm1 = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) norm1 = std::max(norm1, a.col(j).cwiseAbs().sum());
    int squarings = 0;
    while (norm1 / std::ldexp(1.0, squarings) > 0.25) ++squarings;
    const ComplexMatrix b = a / std::ldexp(1.0, squarings);
    ComplexMatrix sum = ComplexMatrix::Identity(a.rows(), a.cols());
    ComplexMatrix term = sum;
    for (int k = 1; k <= terms; ++k) {
        term = term * b / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; ++s) sum = sum * sum;
    return sum;
}

/// Largest singular value by power iteration on A^dagger A.
inline double power_norm(const ComplexMatrix &a, int iters = 2000) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(a.cols());
    for (Eigen::Index k = 0; k < v.size(); ++k) v[k] += Complex(0.01 * k, 0.003 * k * k);
    v.normalize();
    double lambda = 0.0;
    const ComplexMatrix g = a.adjoint() * a;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd w = g * v;
        const double nrm = w.norm();
        if (nrm == 0.0) return 0.0;
        lambda = nrm;
        v = w / nrm;
    }
    return std::sqrt(lambda);
}

/// sum_k c_k cos(k arccos x).
inline Complex cheb_trig(const std::vector<Complex> &c, double x) {
    const double th = std::acos(std::clamp(x, -1.0, 1.0));
    Complex s = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * std::cos(static_cast<double>(k) * th);
    return s;
}

/// sum_k c_k T_k(A) by the three-term matrix recurrence.
inline ComplexMatrix cheb_matrix(const std::vector<Complex> &c, const ComplexMatrix &a) {
    const Eigen::Index n = a.rows();
    ComplexMatrix t_prev = ComplexMatrix::Identity(n, n);
    ComplexMatrix t_cur = a;
    ComplexMatrix out = c.empty() ? ComplexMatrix::Zero(n, n) : ComplexMatrix(c[0] * t_prev);
    if (c.size() > 1) out += c[1] * t_cur;
    for (std::size_t k = 2; k < c.size(); ++k) {
        ComplexMatrix t_next = 2.0 * a * t_cur - t_prev;
        out += c[k] * t_next;
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
    }
    return out;
}

/// Bessel J_n(t) from its ascending power series.
inline double bessel_series(int n, double t, int terms = 80) {
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= (t / 2.0) / k;
    double sum = term;
    for (int j = 1; j < terms; ++j) {
        term *= -(t / 2.0) * (t / 2.0) / (static_cast<double>(j) * (j + n));
        sum += term;
    }
    return sum;
}

namespace detail {
inline Complex simpson_step(const std::function<Complex(double)> &f, double a, double b, Complex fa, Complex fm,
                            Complex fb, Complex whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const Complex flm = f(lm);
    const Complex frm = f(rm);
    const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
        return left + right + (left + right - whole) / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           simpson_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}
}  // namespace detail

/// Adaptive Simpson quadrature of a complex-valued f on [a, b], seeded with
/// 64 equal panels so narrow features cannot hide between the first samples.
inline Complex simpson(const std::function<Complex(double)> &f, double a, double b, double tol = 1e-14) {
    if (a == b) return 0.0;
    constexpr int kPanels = 64;
    Complex sum = 0.0;
    for (int k = 0; k < kPanels; ++k) {
        const double lo = a + (b - a) * k / kPanels;
        const double hi = a + (b - a) * (k + 1) / kPanels;
        const Complex fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
        const Complex whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        sum += detail::simpson_step(f, lo, hi, fa, fm, fb, whole, tol / kPanels, 50);
    }
    return sum;
}

/// H with U = exp(-iH) and spectrum of H in (-pi, pi], via a general eigensolver.
inline ComplexMatrix principal_log_hamiltonian(const ComplexMatrix &u) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(u);
    Eigen::VectorXcd w(u.rows());
    for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = -std::arg(es.eigenvalues()[k]);
    return es.eigenvectors() * w.asDiagonal() * es.eigenvectors().inverse();
}

/// Time-ordered propagator of i dU/dt = H(t) U by classical RK4.
inline ComplexMatrix rk4_propagator(const std::function<ComplexMatrix(double)> &h, double t, int steps) {
    const Eigen::Index n = h(0.0).rows();
    ComplexMatrix u = ComplexMatrix::Identity(n, n);
    const double dt = t / steps;
    const Complex mi(0.0, -1.0);
    for (int k = 0; k < steps; ++k) {
        const double s = k * dt;
        const ComplexMatrix hm = h(s + 0.5 * dt);
        const ComplexMatrix k1 = mi * h(s) * u;
        const ComplexMatrix k2 = mi * hm * (u + 0.5 * dt * k1);
        const ComplexMatrix k3 = mi * hm * (u + 0.5 * dt * k2);
        const ComplexMatrix k4 = mi * h(s + dt) * (u + dt * k3);
        u += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return u;
}

inline ComplexMatrix random_matrix(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
    return m;
}

/// Random Hermitian matrix scaled to the given spectral norm (power-iteration estimate).
inline ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64 &rng, double norm) {
    const ComplexMatrix m = random_matrix(n, rng);
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    const double current = std::max(std::abs(es.eigenvalues().minCoeff()), std::abs(es.eigenvalues().maxCoeff()));
    return h * (norm / current);
}

inline ComplexMatrix random_unitary(Eigen::Index n, std::mt19937_64 &rng) {
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(n, rng));
    return qr.householderQ() * ComplexMatrix::Identity(n, n);
}

/// Chebyshev coefficients of a random real polynomial of the given parity and
/// degree, scaled so its maximum modulus on a dense grid equals `sup`.
inline std::vector<Complex> random_parity_coeffs(int degree, bool odd, double sup, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, 0.0);
    for (int k = odd ? 1 : 0; k <= degree; k += 2) c[static_cast<std::size_t>(k)] = u(rng) / (1.0 + 0.2 * k);
    if (c.back() == Complex(0.0)) c.back() = 0.1;
    double peak = 0.0;
    for (int j = 0; j <= 4000; ++j) peak = std::max(peak, std::abs(cheb_trig(c, -1.0 + j / 2000.0)));
    for (auto &v : c) v *= sup / peak;
    return c;
}

}  // namespace oracle
