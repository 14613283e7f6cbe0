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

namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 z_rotation(double theta) {
    Mat2 r = Mat2::Zero();
    r(0, 0) = std::polar(1.0, theta);
    r(1, 1) = std::polar(1.0, -theta);
    return r;
}

// Newton on symmetric phases theta_j = theta_{d-j}. With n free parameters the
// realized polynomial Re P has the target's parity and n free coefficients, so
// matching at n positive Chebyshev nodes pins it exactly.
class SymmetricPhaseProblem {
   public:
    SymmetricPhaseProblem(int degree, std::vector<double> target_at_nodes, std::vector<double> nodes)
        : d_(degree), target_(std::move(target_at_nodes)), nodes_(std::move(nodes)) {}

    int free_count() const { return d_ / 2 + 1; }

    std::vector<double> expand(const Eigen::VectorXd &p) const {
        std::vector<double> theta(static_cast<std::size_t>(d_) + 1);
        for (int j = 0; j <= d_; ++j) {
            theta[static_cast<std::size_t>(j)] = p[std::min(j, d_ - j)];
        }
        return theta;
    }

    // Residual F and Jacobian dF/dp at the current free parameters.
    void evaluate(const Eigen::VectorXd &p, Eigen::VectorXd &f, Eigen::MatrixXd *jac) const {
        const int n = free_count();
        const auto theta = expand(p);
        f.resize(n);
        if (jac) jac->setZero(n, n);
        std::vector<Mat2> prefix(static_cast<std::size_t>(d_) + 1);
        std::vector<Mat2> suffix(static_cast<std::size_t>(d_) + 1);
        Mat2 iz = Mat2::Zero();
        iz(0, 0) = kI;
        iz(1, 1) = -kI;
        for (int k = 0; k < n; ++k) {
            const double x = nodes_[static_cast<std::size_t>(k)];
            const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
            Mat2 w;
            w << x, kI * s, kI * s, x;
            // prefix[j] = R_0 W R_1 W ... R_{j-1} W ; suffix[j] = W R_{j+1} ... W R_d.
            prefix[0] = Mat2::Identity();
            for (int j = 1; j <= d_; ++j) {
                prefix[static_cast<std::size_t>(j)] =
                    prefix[static_cast<std::size_t>(j - 1)] * z_rotation(theta[static_cast<std::size_t>(j - 1)]) * w;
            }
            suffix[static_cast<std::size_t>(d_)] = Mat2::Identity();
            for (int j = d_ - 1; j >= 0; --j) {
                suffix[static_cast<std::size_t>(j)] =
                    w * z_rotation(theta[static_cast<std::size_t>(j + 1)]) * suffix[static_cast<std::size_t>(j + 1)];
            }
            const Mat2 full = prefix[static_cast<std::size_t>(d_)] * z_rotation(theta[static_cast<std::size_t>(d_)]);
            f[k] = full(0, 0).real() - target_[static_cast<std::size_t>(k)];
            if (!jac) continue;
            for (int j = 0; j <= d_; ++j) {
                const auto ju = static_cast<std::size_t>(j);
                const Mat2 dm = prefix[ju] * iz * z_rotation(theta[ju]) * suffix[ju];
                (*jac)(k, std::min(j, d_ - j)) += dm(0, 0).real();
            }
        }
    }

    // Damped Newton from `p`; returns the final max-norm residual.
    double solve(Eigen::VectorXd &p, int max_iterations, double stop) const {
        Eigen::VectorXd f;
        Eigen::MatrixXd jac;
        evaluate(p, f, &jac);
        double res = f.cwiseAbs().maxCoeff();
        for (int it = 0; it < max_iterations && res > stop; ++it) {
            Eigen::VectorXd step = jac.colPivHouseholderQr().solve(-f);
            if (!step.allFinite()) {
                // Singular Jacobian: fall back to a Levenberg-Marquardt step.
                const Eigen::MatrixXd jtj = jac.transpose() * jac + 1e-10 * Eigen::MatrixXd::Identity(jac.cols(), jac.cols());
                step = jtj.ldlt().solve(-jac.transpose() * f);
            }
            double alpha = 1.0;
            bool accepted = false;
            Eigen::VectorXd trial_f;
            for (int ls = 0; ls < 30; ++ls) {
                const Eigen::VectorXd trial = p + alpha * step;
                evaluate(trial, trial_f, nullptr);
                if (trial_f.norm() < f.norm()) {
                    p = trial;
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) {
                break;
            }
            evaluate(p, f, &jac);
            res = f.cwiseAbs().maxCoeff();
        }
        return res;
    }

   private:
    int d_;
    std::vector<double> target_;
    std::vector<double> nodes_;
};

}  // namespace

PhaseSequence find_phases(const ChebyshevPoly &target, double tol, const PhaseSolverOptions &opts) {
    if (!(tol >= 1e-12)) {
        throw DomainError("find_phases: tol must be at least 1e-12");
    }
    if (target.parity() == Parity::none) {
        throw ParityError("find_phases: target has no definite parity");
    }
    if (!target.is_real(1e-14)) {
        throw DomainError("find_phases: target coefficients must be real");
    }
    if (target.sup_bound() > 1.0 + 1e-12) {
        throw DomainError("find_phases: target exceeds 1 in magnitude on [-1,1]");
    }
    int d = target.degree();
    if (target.parity() == Parity::odd && d == 0) {
        d = 1;  // zero polynomial declared odd
    }
    if (d == 0) {
        const double c0 = std::clamp(target.coeffs()[0].real(), -1.0, 1.0);
        return PhaseSequence({std::acos(c0)});
    }

    const int n = d / 2 + 1;
    std::vector<double> nodes(static_cast<std::size_t>(n));
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        nodes[static_cast<std::size_t>(k)] = std::cos((2.0 * k + 1.0) * std::numbers::pi / (4.0 * n));
        values[static_cast<std::size_t>(k)] = target(nodes[static_cast<std::size_t>(k)]).real();
    }

    // Start where Re P == 0; the Jacobian is well conditioned there.
    Eigen::VectorXd p0 = Eigen::VectorXd::Zero(n);
    p0[0] = std::numbers::pi / 4.0;
    const double stop = std::max(1e-15, 0.05 * tol);

    auto attempt = [&](Eigen::VectorXd p, const std::vector<double> &scales) -> std::pair<PhaseSequence, double> {
        for (double s : scales) {
            std::vector<double> scaled(values);
            for (auto &v : scaled) v *= s;
            SymmetricPhaseProblem prob(d, std::move(scaled), nodes);
            prob.solve(p, opts.max_iterations, stop);
        }
        SymmetricPhaseProblem prob(d, values, nodes);
        PhaseSequence phi(prob.expand(p));
        return {phi, phase_residual(phi, target)};
    };

    auto [phi, res] = attempt(p0, {1.0});
    if (res <= tol) {
        return phi;
    }
    auto [phi2, res2] = attempt(p0, opts.continuation);
    if (res2 <= tol) {
        return phi2;
    }
    throw ConvergenceError("find_phases: no phases within tol (residual " + std::to_string(std::min(res, res2)) + ")",
                           std::min(res, res2));
}

}  // namespace tdqsp
