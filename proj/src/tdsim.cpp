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

#include "tdqsp/tdsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tdqsp/errors.hpp"
#include "tdqsp/qsp.hpp"

namespace tdqsp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCoeffBoundTol = 1e-12;
constexpr double kHeadroom = 1.0 - 1e-3;
// Approximant parts whose sup falls below this are dropped; their size is charged to the error.
constexpr double kNegligiblePart = 1e-14;
constexpr int kMaxApproximantDegree = 1024;

void require_unit_time(double t, const char *who) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError(std::string(who) + ": t must lie in [0, 1]");
    }
}

}  // namespace

CoefficientFn CoefficientFn::constant(double c) {
    CoefficientFn f;
    f.kind_ = Kind::constant;
    f.value_ = c;
    f.check_bounded();
    return f;
}

CoefficientFn CoefficientFn::polynomial(std::vector<double> monomial_coeffs) {
    if (monomial_coeffs.empty()) {
        monomial_coeffs.push_back(0.0);
    }
    CoefficientFn f;
    f.kind_ = Kind::polynomial;
    f.monomials_ = std::move(monomial_coeffs);
    f.check_bounded();
    return f;
}

CoefficientFn CoefficientFn::trig(int m, double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("CoefficientFn::trig: omega must be positive and finite");
    }
    CoefficientFn f;
    f.kind_ = Kind::trig;
    f.m_ = m;
    f.omega_ = omega;
    return f;
}

CoefficientFn CoefficientFn::rectangle(double t_on, double t_off, double amplitude, double delta, double eps) {
    if (!(0.0 <= t_on && t_on < t_off && t_off <= 1.0)) {
        throw DomainError("CoefficientFn::rectangle: need 0 <= t_on < t_off <= 1");
    }
    CoefficientFn f;
    f.kind_ = Kind::rectangle;
    f.t_on_ = t_on;
    f.t_off_ = t_off;
    f.value_ = amplitude;
    f.delta_ = delta;
    f.eps_ = eps;
    f.center_ = 0.5 * (t_on + t_off);
    const double stretch = 1.0 + f.center_;
    // u = (t - c)/(1 + c) maps [-1, 1] into [-1, 1] and the window to [-w, w].
    const double half_width = 0.5 * (t_off - t_on) / stretch;
    f.pulse_ = rect_poly(half_width, delta / stretch, eps);
    f.pulse_integral_ = f.pulse_.antiderivative(0.0);
    f.check_bounded();
    return f;
}

const char *CoefficientFn::kind_name() const noexcept {
    switch (kind_) {
        case Kind::constant:
            return "constant";
        case Kind::polynomial:
            return "polynomial";
        case Kind::trig:
            return "trig";
        case Kind::rectangle:
            return "rectangle";
    }
    return "?";
}

void CoefficientFn::check_bounded() const {
    constexpr int n = 1001;
    for (int j = 0; j < n; ++j) {
        const double t = static_cast<double>(j) / (n - 1);
        if (std::abs(eval_extended(t)) > 1.0 + kCoeffBoundTol) {
            throw DomainError(std::string("CoefficientFn(") + kind_name() + "): |gamma(t)| exceeds 1 on [0, 1]");
        }
    }
}

Complex CoefficientFn::eval_extended(double x) const {
    switch (kind_) {
        case Kind::constant:
            return value_;
        case Kind::polynomial: {
            double acc = 0.0;
            for (auto it = monomials_.rbegin(); it != monomials_.rend(); ++it) {
                acc = acc * x + *it;
            }
            return acc;
        }
        case Kind::trig:
            return std::exp(Complex(0.0, -static_cast<double>(m_) * omega_ * x));
        case Kind::rectangle:
            return value_ * pulse_((x - center_) / (1.0 + center_)).real();
    }
    return 0.0;
}

Complex CoefficientFn::integral_extended(double x) const {
    switch (kind_) {
        case Kind::constant:
            return value_ * x;
        case Kind::polynomial: {
            double acc = 0.0;
            for (std::size_t k = monomials_.size(); k-- > 0;) {
                acc = acc * x + monomials_[k] / static_cast<double>(k + 1);
            }
            return acc * x;
        }
        case Kind::trig: {
            if (m_ == 0) {
                return x;
            }
            const double mw = static_cast<double>(m_) * omega_;
            return (1.0 - std::exp(Complex(0.0, -mw * x))) / Complex(0.0, mw);
        }
        case Kind::rectangle: {
            const double stretch = 1.0 + center_;
            const double u = (x - center_) / stretch;
            const double u0 = -center_ / stretch;
            return value_ * stretch * (pulse_integral_(u) - pulse_integral_(u0)).real();
        }
    }
    return 0.0;
}

Complex CoefficientFn::eval(double t) const {
    require_unit_time(t, "coeff_eval");
    return eval_extended(t);
}

Complex CoefficientFn::integral(double t) const {
    require_unit_time(t, "coeff_integral");
    return integral_extended(t);
}

Complex coeff_eval(const CoefficientFn &c, double t) { return c.eval(t); }

Complex coeff_integral(const CoefficientFn &c, double t) { return c.integral(t); }

const char *to_string(InputMode m) {
    return m == InputMode::evolution_oracle ? "evolution-oracle" : "direct-encoding";
}

const char *to_string(SimulationMode m) { return m == SimulationMode::effective_time ? "effective-time" : "m-fold"; }

TDHamiltonian::TDHamiltonian(int system_qubits, std::vector<Term> terms)
    : system_qubits_(system_qubits), terms_(std::move(terms)) {
    if (system_qubits_ < 1 || (std::size_t{1} << system_qubits_) > static_cast<std::size_t>(kDefaultDimCap)) {
        throw SizingError("TDHamiltonian: system_qubits out of range");
    }
    const Eigen::Index d = dim();
    matrices_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term &term = terms_[i];
        ComplexMatrix h;
        if (const auto *p = std::get_if<PauliOperator>(&term.op)) {
            if (static_cast<int>(p->string.n_sites()) != system_qubits_) {
                throw DimensionError("TDHamiltonian: Pauli string length differs from system_qubits");
            }
            if (!std::isfinite(p->prefactor)) {
                throw DomainError("TDHamiltonian: Pauli prefactor must be finite");
            }
            h = p->prefactor * pauli_matrix(p->string);
        } else {
            h = std::get<ComplexMatrix>(term.op);
            if (h.rows() != d || h.cols() != d) {
                throw DimensionError("TDHamiltonian: term matrix dimension differs from 2^system_qubits");
            }
        }
        const std::string tag = "TDHamiltonian term " + std::to_string(i);
        if (!is_finite(h) || !is_hermitian(h, kStructuralTol)) {
            throw ModelError(tag + ": operator is not Hermitian");
        }
        const double norm = spectral_norm(h);
        if (term.mode == InputMode::evolution_oracle && norm > 0.5 + kStructuralTol) {
            throw ModelError(tag + ": evolution-oracle input needs spectral norm <= 1/2");
        }
        if (term.mode == InputMode::direct_encoding && norm > 0.0 && !is_unitary(h / norm, kStructuralTol)) {
            throw ModelError(tag + ": direct-encoding input must be a multiple of a unitary");
        }
        matrices_.push_back(std::move(h));
    }
    constexpr int samples = 11;
    for (int k = 0; k < samples; ++k) {
        const ComplexMatrix h = at(static_cast<double>(k) / (samples - 1));
        if (!is_hermitian(h, kStructuralTol)) {
            throw ModelError("TDHamiltonian: assembled H(t) is not Hermitian (unpaired complex coefficients?)");
        }
    }
}

ComplexMatrix TDHamiltonian::at(double t) const {
    require_unit_time(t, "TDHamiltonian::at");
    ComplexMatrix h = ComplexMatrix::Zero(dim(), dim());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        h += terms_[i].coeff.eval(t) * matrices_[i];
    }
    return h;
}

CommutingReport check_commuting(const TDHamiltonian &td, double tol) {
    CommutingReport report;
    for (std::size_t i = 0; i < td.size(); ++i) {
        for (std::size_t j = i + 1; j < td.size(); ++j) {
            const double c = spectral_norm(commutator(td.term_matrix(i), td.term_matrix(j)));
            if (c > report.max_commutator_norm) {
                report.max_commutator_norm = c;
            }
            if (c > tol && !report.offending) {
                report.offending = std::make_pair(i, j);
            }
        }
    }
    constexpr int samples = 5;
    std::vector<ComplexMatrix> snapshots;
    for (int k = 0; k < samples; ++k) {
        snapshots.push_back(td.at(static_cast<double>(k) / (samples - 1)));
    }
    for (int a = 0; a < samples; ++a) {
        for (int b = a + 1; b < samples; ++b) {
            report.max_time_pair_norm =
                std::max(report.max_time_pair_norm, spectral_norm(commutator(snapshots[a], snapshots[b])));
        }
    }
    report.pass = !report.offending.has_value() && report.max_time_pair_norm <= tol;
    return report;
}

ComplexMatrix h_integral(const TDHamiltonian &td, double t) {
    require_unit_time(t, "h_integral");
    ComplexMatrix h = ComplexMatrix::Zero(td.dim(), td.dim());
    for (std::size_t i = 0; i < td.size(); ++i) {
        h += td.term(i).coeff.integral(t) * td.term_matrix(i);
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (!is_hermitian(h, kStructuralTol * scale)) {
        throw ModelError("h_integral: integrated Hamiltonian is not Hermitian");
    }
    return h;
}

namespace {

struct Approximant {
    ChebyshevPoly poly;
    double error = 0.0;
};

// Smallest-degree Chebyshev fit of alpha on [-1, 1] meeting `budget` on the check grid.
Approximant fit_integral(const CoefficientFn &coeff, double budget) {
    const auto f = [&coeff](double x) { return coeff.integral_extended(x); };
    auto attempt = [&](int d) {
        Approximant a;
        a.poly = cheb_fit(f, d);
        a.error = grid_error(a.poly, f);
        return a;
    };
    int hi = 1;
    Approximant best = attempt(hi);
    while (best.error > budget) {
        if (hi >= kMaxApproximantDegree) {
            throw ConvergenceError("simulate_td: coefficient integral needs degree above cap", best.error);
        }
        hi = std::min(2 * hi, kMaxApproximantDegree);
        best = attempt(hi);
    }
    int lo = hi / 2;  // lo fails (or is 0)
    while (hi - lo > 1) {
        const int mid = (lo + hi) / 2;
        auto a = attempt(mid);
        if (a.error <= budget) {
            hi = mid;
            best = std::move(a);
        } else {
            lo = mid;
        }
    }
    return best;
}

// Encoding of alpha_i(t) from its re/im x even/odd parts. Returns nullopt
// when every part is negligible; `dropped` collects the discarded size.
std::optional<BlockEncoding> scalar_encoding(const Approximant &approx, double t, std::size_t term_index,
                                             QueryLedger &ledger, double &dropped) {
    struct Part {
        const char *name;
        ChebyshevPoly poly;
        Complex weight;
    };
    const ChebyshevPoly re = approx.poly.real_part();
    const ChebyshevPoly im = approx.poly.imag_part();
    const Part parts[] = {{"re.even", re.even_part(), 1.0},
                          {"re.odd", re.odd_part(), 1.0},
                          {"im.even", im.even_part(), Complex(0.0, 1.0)},
                          {"im.odd", im.odd_part(), Complex(0.0, 1.0)}};
    std::vector<BlockEncoding> encs;
    std::vector<Complex> weights;
    for (const auto &part : parts) {
        const double sup = part.poly.sup_bound();
        if (sup <= kNegligiblePart) {
            dropped += sup;
            continue;
        }
        const double sigma = sup / kHeadroom;
        encs.push_back(be_scalar(part.poly.scaled(1.0 / sigma), t, &ledger).rescaled(sigma));
        weights.push_back(part.weight);
        ledger.degrees["alpha[" + std::to_string(term_index) + "]." + part.name] = part.poly.degree();
    }
    if (encs.empty()) {
        return std::nullopt;
    }
    const auto combined = be_lcu(encs, weights, &ledger);
    return combined.with_err(combined.err() + approx.error);
}

BlockEncoding operator_encoding(const TDHamiltonian &td, std::size_t i, double eps, QueryLedger &ledger) {
    const Term &term = td.term(i);
    const ComplexMatrix &h = td.term_matrix(i);
    if (term.mode == InputMode::evolution_oracle) {
        // Corner ~ (pi/2) H at scale pi^2/4; rescale so the corner reads H.
        const auto enc = be_log_unitary(expm_i(h, 1.0), std::min(eps, 0.5), &ledger);
        return enc.rescaled(2.0 / kPi);
    }
    if (const auto *p = std::get_if<PauliOperator>(&term.op)) {
        const double sign = p->prefactor < 0.0 ? -1.0 : 1.0;
        return be_from_unitary(sign * pauli_matrix(p->string)).rescaled(std::abs(p->prefactor));
    }
    const double norm = spectral_norm(h);
    return be_from_unitary(h / norm).rescaled(norm);
}

}  // namespace

BlockEncoding simulate_td(const TDHamiltonian &td, double t, double eps, QueryLedger &ledger,
                          const SimulateOptions &opts) {
    require_unit_time(t, "simulate_td");
    if (!(eps > 0.0 && eps < 0.5)) {
        throw DomainError("simulate_td: eps must lie in (0, 1/2)");
    }
    if (t == 0.0) {
        return be_from_unitary(identity(td.dim()));
    }
    const auto report = check_commuting(td, opts.commute_tol);
    if (!report.pass && !opts.force_noncommuting) {
        std::string msg = "simulate_td: Hamiltonian does not commute with itself at different times";
        if (report.offending) {
            msg += " (terms " + std::to_string(report.offending->first) + " and " +
                   std::to_string(report.offending->second) + ")";
        }
        msg += "; max commutator norm " + std::to_string(report.max_commutator_norm);
        throw CommutativityError(msg);
    }

    // Budget: eps/4 scalar approximants, eps/4 operator encodings, eps/2 exponentiation.
    const double m = static_cast<double>(td.size());
    double extra_err = 0.0;
    std::vector<BlockEncoding> terms;
    for (std::size_t i = 0; i < td.size(); ++i) {
        const ComplexMatrix &h = td.term_matrix(i);
        const double h_norm = spectral_norm(h);
        if (h_norm == 0.0) {
            continue;
        }
        // Operator scale is pi/2 (oracle route) or ||H_i|| (direct route).
        const double op_scale = td.term(i).mode == InputMode::evolution_oracle ? kPi / 2.0 : h_norm;
        const auto approx = fit_integral(td.term(i).coeff, eps / (4.0 * m * op_scale));
        double dropped = 0.0;
        auto scalar = scalar_encoding(approx, t, i, ledger, dropped);
        if (!scalar) {
            extra_err += (dropped + approx.error) * h_norm;
            continue;
        }
        extra_err += dropped * h_norm;
        const auto op = operator_encoding(td, i, eps / (4.0 * m * scalar->scale()), ledger);
        terms.push_back(be_scale_mul(*scalar, op, &ledger));
    }
    if (terms.empty()) {
        return be_from_unitary(identity(td.dim())).with_err(extra_err);
    }
    const auto sum = be_lcu(terms, std::vector<Complex>(terms.size(), Complex(1.0)), &ledger);

    QsvtOptions qopts;
    qopts.hermitian_tol = std::max(qopts.hermitian_tol, 2.0 * sum.err() / sum.scale());
    const double sim_eps = eps / 2.0;
    BlockEncoding out = [&] {
        if (opts.mode == SimulationMode::effective_time) {
            return be_simulate(sum, 1.0, sim_eps, &ledger, qopts);
        }
        const int r = std::max(1, static_cast<int>(std::ceil(2.0 * m / kPi)));
        const auto factor = be_simulate(sum, 1.0 / r, sim_eps / r, &ledger, qopts);
        BlockEncoding acc = factor;
        for (int k = 1; k < r; ++k) {
            acc = be_product(acc, factor, &ledger);
        }
        return acc;
    }();
    out = out.with_err(out.err() + extra_err);
    ledger.note(out);
    if (out.err() > eps) {
        throw ConvergenceError("simulate_td: recorded error exceeds the requested eps", out.err());
    }
    return out;
}

ComplexMatrix reference_propagator(const TDHamiltonian &td, double t, int steps) {
    require_unit_time(t, "reference_propagator");
    if (steps < 1) {
        throw DomainError("reference_propagator: steps must be >= 1");
    }
    ComplexMatrix u = identity(td.dim());
    if (t == 0.0) {
        return u;
    }
    const double dt = t / steps;
    for (int k = 0; k < steps; ++k) {
        u = expm_i(td.at((k + 0.5) * dt), dt) * u;
    }
    return u;
}

ComplexMatrix trotter1(const TDHamiltonian &td, double t, int steps) {
    require_unit_time(t, "trotter1");
    if (steps < 1) {
        throw DomainError("trotter1: steps must be >= 1");
    }
    ComplexMatrix u = identity(td.dim());
    if (t == 0.0) {
        return u;
    }
    std::vector<HermitianEigen> eigs;
    eigs.reserve(td.size());
    for (std::size_t i = 0; i < td.size(); ++i) {
        eigs.push_back(eig_hermitian(td.term_matrix(i)));
    }
    const double dt = t / steps;
    for (int k = 0; k < steps; ++k) {
        const double tk = k * dt;
        for (std::size_t i = 0; i < td.size(); ++i) {
            const Complex z = td.term(i).coeff.eval(tk) * dt;
            u = spectral_apply(eigs[i], [z](double w) { return std::exp(Complex(0.0, -1.0) * z * w); }) * u;
        }
    }
    return u;
}

QueryReport query_report(const QueryLedger &ledger) {
    QueryReport r;
    r.w_gate_uses = ledger.w_gate_uses;
    r.encoding_uses = ledger.encoding_uses;
    r.ancillas_peak = ledger.ancillas_peak;
    r.reunitarizations = ledger.reunitarizations;
    for (const auto &[name, degree] : ledger.degrees) {
        r.degrees.emplace_back(name, degree);
        if (name.rfind("alpha[", 0) == 0) {
            r.alpha_degree_sum += degree;
        }
    }
    if (auto it = ledger.degrees.find("jacobi_anger"); it != ledger.degrees.end()) {
        r.jacobi_degree = it->second;
    }
    return r;
}

}  // namespace tdqsp
