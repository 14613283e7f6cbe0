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

#include "tdqsp/qsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdqsp/errors.hpp"

namespace tdqsp {

PhaseSequence::PhaseSequence(std::vector<double> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw DomainError("PhaseSequence: needs at least one angle");
    }
    for (double a : angles_) {
        if (!std::isfinite(a)) {
            throw DomainError("PhaseSequence: non-finite angle");
        }
    }
}

PhaseSequence PhaseSequence::negated() const {
    auto a = angles_;
    for (auto &v : a) v = -v;
    return PhaseSequence(std::move(a));
}

ComplexMatrix signal_w(double x) {
    if (!(std::abs(x) <= 1.0)) {
        throw DomainError("signal_w: |x| must be at most 1");
    }
    const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
    ComplexMatrix w(2, 2);
    w << x, kI * s, kI * s, x;
    return w;
}

namespace {

// 2x2 products dominate here, so avoid the dynamic-size path.
using Mat2 = Eigen::Matrix2cd;

Mat2 z_rotation(double theta) {
    Mat2 r = Mat2::Zero();
    r(0, 0) = std::polar(1.0, theta);
    r(1, 1) = std::polar(1.0, -theta);
    return r;
}

}  // namespace

ComplexMatrix apply_phases(const PhaseSequence &phi, double x) {
    const Mat2 w = signal_w(x);
    Mat2 m = z_rotation(phi[0]);
    for (std::size_t j = 1; j < phi.angles().size(); ++j) {
        m = m * w;
        // Right-multiplying by a diagonal rotation scales columns.
        m.col(0) *= std::polar(1.0, phi[j]);
        m.col(1) *= std::polar(1.0, -phi[j]);
    }
    return m;
}

double realized_value(const PhaseSequence &phi, double x) { return apply_phases(phi, x)(0, 0).real(); }

double phase_residual(const PhaseSequence &phi, const ChebyshevPoly &target) {
    const int d = std::max(1, phi.degree());
    double worst = 0.0;
    for (int j = 0; j <= 2 * d; ++j) {
        const double x = std::cos(std::numbers::pi * j / (2.0 * d));
        worst = std::max(worst, std::abs(realized_value(phi, x) - target(x).real()));
    }
    return worst;
}

}  // namespace tdqsp
