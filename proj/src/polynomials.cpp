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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdqsp/errors.hpp"
#include "tdqsp/qsp.hpp"

namespace tdqsp {

std::vector<double> bessel_j_sequence(int n_max, double t) {
    if (n_max < 0) {
        throw DomainError("bessel_j_sequence: n_max must be non-negative");
    }
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    if (t == 0.0) {
        out[0] = 1.0;
        return out;
    }
    const double at = std::abs(t);
    // Start well above both n_max and |t| so the backward recurrence has
    // forgotten its arbitrary seed by the time it reaches the wanted orders.
    int start = std::max(n_max, static_cast<int>(std::ceil(at))) + 40 +
                static_cast<int>(std::ceil(std::sqrt(40.0 * std::max(n_max, static_cast<int>(at) + 1))));
    start += start % 2;
    std::vector<double> j(static_cast<std::size_t>(start) + 2, 0.0);
    j[static_cast<std::size_t>(start)] = 1e-300;
    for (int k = start; k >= 1; --k) {
        const auto ku = static_cast<std::size_t>(k);
        j[ku - 1] = (2.0 * k / at) * j[ku] - j[ku + 1];
        if (std::abs(j[ku - 1]) > 1e250) {
            for (std::size_t m = ku - 1; m < j.size(); ++m) j[m] *= 1e-250;
        }
    }
    double norm = j[0];
    for (int k = 2; k <= start; k += 2) norm += 2.0 * j[static_cast<std::size_t>(k)];
    for (int k = 0; k <= n_max; ++k) {
        double v = j[static_cast<std::size_t>(k)] / norm;
        if (t < 0.0 && k % 2 == 1) v = -v;
        out[static_cast<std::size_t>(k)] = v;
    }
    return out;
}

JacobiAnger jacobi_anger(double t_eff, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw DomainError("jacobi_anger: eps must lie in (0, 1/2)");
    }
    if (!(t_eff >= 0.0) || !std::isfinite(t_eff)) {
        throw DomainError("jacobi_anger: t_eff must be finite and non-negative");
    }
    const int n_max = static_cast<int>(std::ceil(1.5 * t_eff)) + 80;
    const auto jn = bessel_j_sequence(n_max, t_eff);

    // tail[k] = 2 * sum_{m > k} |J_m|
    std::vector<double> tail(jn.size(), 0.0);
    for (std::size_t k = jn.size() - 1; k-- > 0;) {
        tail[k] = tail[k + 1] + 2.0 * std::abs(jn[k + 1]);
    }
    int degree = 0;
    while (degree < n_max && tail[static_cast<std::size_t>(degree)] > eps) {
        ++degree;
    }

    std::vector<Complex> c_cos(static_cast<std::size_t>(degree) + 1, 0.0);
    std::vector<Complex> c_sin(static_cast<std::size_t>(degree) + 1, 0.0);
    c_cos[0] = jn[0];
    for (int k = 1; k <= degree; ++k) {
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            c_cos[static_cast<std::size_t>(k)] = 2.0 * sign * jn[static_cast<std::size_t>(k)];
        } else {
            c_sin[static_cast<std::size_t>(k)] = 2.0 * sign * jn[static_cast<std::size_t>(k)];
        }
    }
    JacobiAnger out{ChebyshevPoly(std::move(c_cos), Parity::even), ChebyshevPoly(std::move(c_sin), Parity::odd),
                    degree, tail[static_cast<std::size_t>(degree)]};
    return out;
}

namespace {

// y with erfc(y) = v, for v in (0, 1].
double erfc_inverse(double v) {
    double lo = 0.0;
    double hi = 30.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::erfc(mid) > v ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ChebyshevPoly rect_poly(double t, double delta, double eps) {
    if (!(delta > 0.0 && delta < 0.5) || !(eps > 0.0 && eps < 0.5)) {
        throw DomainError("rect_poly: delta and eps must lie in (0, 1/2)");
    }
    if (!(t > 0.0 && t < 1.0) || t + delta > 1.0 || t - delta <= 0.0) {
        throw DomainError("rect_poly: need 0 < t - delta and t + delta <= 1");
    }
    // Smoothed window R(x) = (erf(k(x+t)) - erf(k(x-t)))/2 sits in [0, eps/4]
    // outside the band and in [1 - eps/4, 1] inside it.
    const double k = erfc_inverse(eps / 4.0) / delta;
    auto window = [k, t](double x) -> Complex { return 0.5 * (std::erf(k * (x + t)) - std::erf(k * (x - t))); };

    const double eta = eps / 8.0;
    int degree = 16;
    ChebyshevPoly q;
    for (;;) {
        q = cheb_fit(window, degree, Parity::even);
        if (grid_error(q, window, 4001) <= eta / 2.0) {
            break;
        }
        if (degree > 20000) {
            throw ConvergenceError("rect_poly: degree cap exceeded", grid_error(q, window, 4001));
        }
        degree = static_cast<int>(std::ceil(degree * 1.15)) + 2;
    }
    q = q.truncated(eta / 2.0);
    // Affine map keeps the bands one-sided: a - b*eta >= 0 and a + b(1+eta) <= 1.
    const double a = eps / 4.0;
    const double b = (1.0 - eps / 4.0) / (1.0 + eta);
    auto c = q.coeffs();
    for (auto &v : c) v *= b;
    c[0] += a;
    ChebyshevPoly p(std::move(c), Parity::even);

    const int n = 2001;
    for (int j = 0; j < n; ++j) {
        const double x = -1.0 + 2.0 * j / (n - 1);
        const double v = p(x).real();
        const double ax = std::abs(x);
        bool ok = std::abs(v) <= 1.0;
        if (ax >= t + delta) ok = ok && v >= 0.0 && v <= eps;
        if (ax <= t - delta) ok = ok && v >= 1.0 - eps && v <= 1.0;
        if (!ok) {
            throw ConvergenceError("rect_poly: band verification failed", v);
        }
    }
    return p;
}

ChebyshevPoly arcsin_poly(double eps, double margin) {
    if (!(eps > 0.0 && eps < 0.5) || !(margin > 0.0 && margin <= 0.5)) {
        throw DomainError("arcsin_poly: eps must lie in (0, 1/2) and margin in (0, 1/2]");
    }
    const double r = 1.0 - margin;
    constexpr int kMaxDegree = 4001;
    // arcsin(x) = sum_k a_k x^(2k+1), a_k = C(2k,k) / (4^k (2k+1)). All a_k > 0,
    // so partial sums of (2/pi) arcsin stay inside [-1, 1].
    std::vector<double> a{1.0};
    double central = 1.0;  // C(2k,k)/4^k
    for (int k = 0;; ++k) {
        const double next_central = central * (2.0 * k + 1.0) / (2.0 * k + 2.0);
        const double a_next = next_central / (2.0 * k + 3.0);
        const double tail = (2.0 / std::numbers::pi) * a_next * std::pow(r, 2 * k + 3) / (1.0 - r * r);
        if (tail <= 0.5 * eps) {
            break;
        }
        if (2 * (k + 1) + 1 > kMaxDegree) {
            throw ConvergenceError("arcsin_poly: degree cap exceeded", tail);
        }
        a.push_back(a_next);
        central = next_central;
    }
    const int degree = 2 * static_cast<int>(a.size()) - 1;
    auto series = [&a](double x) -> Complex {
        const double x2 = x * x;
        double acc = 0.0;
        for (std::size_t k = a.size(); k-- > 0;) acc = acc * x2 + a[k];
        return (2.0 / std::numbers::pi) * acc * x;
    };
    return cheb_fit(series, degree, Parity::odd);
}

}  // namespace tdqsp
