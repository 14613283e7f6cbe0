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

#include "tdqsp/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdqsp/errors.hpp"

namespace tdqsp {

const char *to_string(Parity p) {
    switch (p) {
        case Parity::even:
            return "even";
        case Parity::odd:
            return "odd";
        case Parity::none:
            return "none";
    }
    return "none";
}

Parity detect_parity(const std::vector<Complex> &coeffs, double tol) {
    double even_max = 0.0;
    double odd_max = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        (k % 2 == 0 ? even_max : odd_max) = std::max(k % 2 == 0 ? even_max : odd_max, std::abs(coeffs[k]));
    }
    if (odd_max <= tol) {
        return Parity::even;
    }
    if (even_max <= tol) {
        return Parity::odd;
    }
    return Parity::none;
}

ChebyshevPoly::ChebyshevPoly() : coeffs_{Complex(0.0)} { finish(Parity::none, false); }

ChebyshevPoly::ChebyshevPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    finish(Parity::none, false);
}

ChebyshevPoly::ChebyshevPoly(std::vector<Complex> coeffs, Parity declared) : coeffs_(std::move(coeffs)) {
    finish(declared, true);
}

void ChebyshevPoly::finish(Parity declared, bool declared_explicitly) {
    if (coeffs_.empty()) {
        coeffs_.push_back(0.0);
    }
    for (const auto &c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("ChebyshevPoly: non-finite coefficient");
        }
    }
    if (declared_explicitly && declared != Parity::none) {
        const std::size_t off = declared == Parity::even ? 1 : 0;
        for (std::size_t k = off; k < coeffs_.size(); k += 2) {
            if (std::abs(coeffs_[k]) > kParityTol) {
                throw ParityError(std::string("ChebyshevPoly: coefficients do not certify declared parity ") +
                                  to_string(declared));
            }
        }
        parity_ = declared;
    } else if (declared_explicitly) {
        parity_ = Parity::none;
    } else {
        parity_ = detect_parity(coeffs_);
    }
    if (parity_ != Parity::none) {
        const std::size_t off = parity_ == Parity::even ? 1 : 0;
        for (std::size_t k = off; k < coeffs_.size(); k += 2) {
            coeffs_[k] = 0.0;
        }
    }
    sup_bound_ = grid_sup(*this, 2001);
}

ChebyshevPoly ChebyshevPoly::monomial_x() { return ChebyshevPoly({0.0, 1.0}, Parity::odd); }

ChebyshevPoly ChebyshevPoly::constant(Complex c) { return ChebyshevPoly({c}, Parity::even); }

ChebyshevPoly ChebyshevPoly::basis(int k) {
    if (k < 0) {
        throw DomainError("ChebyshevPoly::basis: negative index");
    }
    std::vector<Complex> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = 1.0;
    return ChebyshevPoly(std::move(c), k % 2 == 0 ? Parity::even : Parity::odd);
}

int ChebyshevPoly::degree() const noexcept {
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k] != Complex(0.0)) {
            return static_cast<int>(k);
        }
    }
    return 0;
}

bool ChebyshevPoly::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex(0.0); });
}

bool ChebyshevPoly::is_real(double tol) const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [tol](Complex c) { return std::abs(c.imag()) <= tol; });
}

Complex ChebyshevPoly::operator()(double x) const {
    // Clenshaw recurrence.
    Complex b1 = 0.0;
    Complex b2 = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        const Complex b0 = coeffs_[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs_[0] + x * b1 - b2;
}

ChebyshevPoly ChebyshevPoly::scaled(Complex s) const {
    auto c = coeffs_;
    for (auto &v : c) {
        v *= s;
    }
    return ChebyshevPoly(std::move(c), parity_);
}

ChebyshevPoly ChebyshevPoly::operator+(const ChebyshevPoly &o) const {
    std::vector<Complex> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) c[k] += o.coeffs_[k];
    return ChebyshevPoly(std::move(c));
}

ChebyshevPoly ChebyshevPoly::operator-(const ChebyshevPoly &o) const { return *this + o.scaled(-1.0); }

ChebyshevPoly ChebyshevPoly::even_part() const {
    auto c = coeffs_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = 0.0;
    return ChebyshevPoly(std::move(c), Parity::even);
}

ChebyshevPoly ChebyshevPoly::odd_part() const {
    auto c = coeffs_;
    for (std::size_t k = 0; k < c.size(); k += 2) c[k] = 0.0;
    return ChebyshevPoly(std::move(c), Parity::odd);
}

ChebyshevPoly ChebyshevPoly::real_part() const {
    auto c = coeffs_;
    for (auto &v : c) v = v.real();
    return ChebyshevPoly(std::move(c), parity_);
}

ChebyshevPoly ChebyshevPoly::imag_part() const {
    auto c = coeffs_;
    for (auto &v : c) v = v.imag();
    return ChebyshevPoly(std::move(c), parity_);
}

ChebyshevPoly ChebyshevPoly::derivative() const {
    const std::size_t n = coeffs_.size();
    if (n <= 1) {
        return ChebyshevPoly();
    }
    std::vector<Complex> d(n + 1, 0.0);
    for (std::size_t k = n - 1; k >= 1; --k) {
        d[k - 1] = d[k + 1] + 2.0 * static_cast<double>(k) * coeffs_[k];
    }
    d[0] *= 0.5;
    d.resize(n - 1);
    Parity p = Parity::none;
    if (parity_ == Parity::even) p = Parity::odd;
    if (parity_ == Parity::odd) p = Parity::even;
    return ChebyshevPoly(std::move(d), p);
}

ChebyshevPoly ChebyshevPoly::antiderivative(double x0) const {
    const std::size_t n = coeffs_.size();
    std::vector<Complex> a(n + 1, 0.0);
    auto c = [&](std::size_t k) { return k < n ? coeffs_[k] : Complex(0.0); };
    // Integral of T_0 is T_1; of T_1 is T_2/4 (+ const), general k >= 2 via
    // int T_k = T_{k+1}/(2(k+1)) - T_{k-1}/(2(k-1)).
    for (std::size_t k = 1; k <= n; ++k) {
        const Complex lower = (k == 1) ? 2.0 * c(0) : c(k - 1);
        a[k] = (lower - c(k + 1)) / (2.0 * static_cast<double>(k));
    }
    ChebyshevPoly raw(a);
    a[0] = -raw(x0);
    Parity p = Parity::none;
    if (parity_ == Parity::even && x0 == 0.0) p = Parity::odd;
    if (parity_ == Parity::odd) p = Parity::even;
    return p == Parity::none ? ChebyshevPoly(std::move(a)) : ChebyshevPoly(std::move(a), p);
}

ChebyshevPoly ChebyshevPoly::truncated(double tol) const {
    auto c = coeffs_;
    double dropped = 0.0;
    while (c.size() > 1 && dropped + std::abs(c.back()) <= tol) {
        dropped += std::abs(c.back());
        c.pop_back();
    }
    return ChebyshevPoly(std::move(c), parity_);
}

std::vector<double> chebyshev_grid(int n) {
    if (n < 2) {
        return {1.0};
    }
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        x[static_cast<std::size_t>(j)] = std::cos(std::numbers::pi * j / (n - 1));
    }
    return x;
}

double grid_sup(const ChebyshevPoly &p, int n) {
    double m = 0.0;
    for (double x : chebyshev_grid(n)) {
        m = std::max(m, std::abs(p(x)));
    }
    return m;
}

double grid_error(const ChebyshevPoly &p, const std::function<Complex(double)> &f, int n, double lo, double hi) {
    double m = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = n == 1 ? lo : lo + (hi - lo) * j / (n - 1);
        m = std::max(m, std::abs(p(x) - f(x)));
    }
    return m;
}

ChebyshevPoly cheb_fit(const std::function<Complex(double)> &f, int degree, Parity hint) {
    if (degree < 0) {
        throw DomainError("cheb_fit: degree must be non-negative");
    }
    const int n = degree + 1;
    std::vector<Complex> fx(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        fx[static_cast<std::size_t>(k)] = f(std::cos(std::numbers::pi * (k + 0.5) / n));
    }
    std::vector<Complex> c(static_cast<std::size_t>(n), 0.0);
    double scale = 0.0;
    for (int j = 0; j < n; ++j) {
        Complex s = 0.0;
        for (int k = 0; k < n; ++k) {
            s += fx[static_cast<std::size_t>(k)] * std::cos(std::numbers::pi * j * (k + 0.5) / n);
        }
        c[static_cast<std::size_t>(j)] = s * (j == 0 ? 1.0 / n : 2.0 / n);
        scale = std::max(scale, std::abs(c[static_cast<std::size_t>(j)]));
    }
    if (hint != Parity::none) {
        const std::size_t off = hint == Parity::even ? 1 : 0;
        double wrong = 0.0;
        for (std::size_t k = off; k < c.size(); k += 2) wrong = std::max(wrong, std::abs(c[k]));
        if (wrong <= 1e-10 * std::max(1.0, scale)) {
            for (std::size_t k = off; k < c.size(); k += 2) c[k] = 0.0;
            return ChebyshevPoly(std::move(c), hint);
        }
    }
    return ChebyshevPoly(std::move(c));
}

}  // namespace tdqsp
