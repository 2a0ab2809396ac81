#include "slab/oscillatory.hpp"

#include <cmath>
#include <stdexcept>

#include "slab/errors.hpp"
#include "slab/quadrature.hpp"

namespace slab {

double bump(double x) {
    if (std::abs(x) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x * x));
}

double bump_at(double x, double c, double w) { return bump((x - c) / w); }

namespace {

double max_abs_deriv(const OscillatoryProblem& prob, int k, int samples = 801) {
    double m = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = prob.lo + (prob.hi - prob.lo) * i / (samples - 1);
        m = std::max(m, std::abs(prob.phase(k, x)));
    }
    return m;
}

// sup |d^k a| by central finite differences on a dense grid.
double sup_amp_deriv(const OscillatoryProblem& prob, int k) {
    const double h = 0.01;
    const int n = 601;
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = prob.lo + (prob.hi - prob.lo) * i / (n - 1);
        double v = 0.0;
        switch (k) {
            case 0: v = prob.amplitude(x); break;
            case 1:
                v = (prob.amplitude(x + h) - prob.amplitude(x - h)) / (2 * h);
                break;
            case 2:
                v = (prob.amplitude(x + h) - 2 * prob.amplitude(x) + prob.amplitude(x - h))
                    / (h * h);
                break;
            case 3:
                v = (prob.amplitude(x + 2 * h) - 2 * prob.amplitude(x + h)
                     + 2 * prob.amplitude(x - h) - prob.amplitude(x - 2 * h))
                    / (2 * h * h * h);
                break;
            case 4:
                v = (prob.amplitude(x + 2 * h) - 4 * prob.amplitude(x + h)
                     + 6 * prob.amplitude(x) - 4 * prob.amplitude(x - h)
                     + prob.amplitude(x - 2 * h))
                    / (h * h * h * h);
                break;
        }
        m = std::max(m, std::abs(v));
    }
    return m;
}

} // namespace

std::complex<double> eval_I(const OscillatoryProblem& prob, double tol) {
    if (!(prob.lambda > 0)) throw std::domain_error("eval_I: lambda must be > 0");
    if (!(tol > 0)) throw std::domain_error("eval_I: tol must be > 0");
    double freq = prob.lambda * max_abs_deriv(prob, 1);
    auto integrand = [&prob](double x) {
        double ph = prob.lambda * prob.phase(0, x);
        return prob.amplitude(x) * std::complex<double>(std::cos(ph), std::sin(ph));
    };
    return integrate_panels(integrand, prob.lo, prob.hi, freq, tol).value;
}

VdcCheck van_der_corput_check(const OscillatoryProblem& prob, int k) {
    if (k < 1) throw std::domain_error("van_der_corput_check: k >= 1");
    const int n = 2001;
    double prev = prob.phase(1, prob.lo);
    for (int i = 0; i < n; ++i) {
        double x = prob.lo + (prob.hi - prob.lo) * i / (n - 1);
        if (std::abs(prob.phase(k, x)) < 1.0 - 1e-9)
            throw contract_error("van_der_corput_check: |phi^(k)| < 1 at sampled point");
        if (k == 1 && i > 0) {
            double cur = prob.phase(1, x);
            if ((cur - prev) * (prob.phase(1, prob.hi) - prob.phase(1, prob.lo)) < 0)
                throw contract_error("van_der_corput_check: phi' not monotone (k = 1)");
            prev = cur;
        }
    }
    VdcCheck out;
    out.lhs = std::abs(eval_I(prob, 1e-12));
    // int |psi'| by trapezoid on finite differences
    const double h = 1e-5;
    long double tv = 0.0L;
    int m = 4001;
    double step = (prob.hi - prob.lo) / (m - 1);
    for (int i = 0; i < m; ++i) {
        double x = prob.lo + i * step;
        double d = (prob.amplitude(std::min(x + h, prob.hi))
                    - prob.amplitude(std::max(x - h, prob.lo)))
                   / (std::min(x + h, prob.hi) - std::max(x - h, prob.lo));
        double w = (i == 0 || i == m - 1) ? 0.5 : 1.0;
        tv += w * std::abs(d) * step;
    }
    out.rhs = std::pow(prob.lambda, -1.0 / k)
              * (std::abs(prob.amplitude(prob.hi)) + double(tv));
    return out;
}

StationaryPhaseResult stationary_phase_leading(const OscillatoryProblem& prob,
                                               double tol, double x0) {
    double phi2 = prob.phase(2, x0);
    if (phi2 == 0.0)
        throw contract_error("stationary_phase_leading: phi''(x0) == 0");
    if (std::abs(prob.phase(1, x0)) > 1e-10)
        throw contract_error("stationary_phase_leading: phi'(x0) != 0");
    double sgn = phi2 > 0 ? 1.0 : -1.0;
    std::complex<double> phase_factor =
        std::polar(1.0, sgn * M_PI / 4.0 + prob.lambda * prob.phase(0, x0));
    StationaryPhaseResult out;
    out.leading = std::sqrt(2.0 * M_PI / prob.lambda) * prob.amplitude(x0)
                  * phase_factor / std::sqrt(std::abs(phi2));
    std::complex<double> I = eval_I(prob, tol);
    out.remainder = I - out.leading;
    double sup_sum = 0.0;
    for (int k = 0; k <= 4; ++k) sup_sum += sup_amp_deriv(prob, k);
    out.remainder_bound = std::pow(prob.lambda, -1.5) * sup_sum;
    return out;
}

namespace {

// psi(x) = 2 int_0^1 (1-t) phi''(tx) dt
double psi_of(const OscillatoryProblem& prob, double x) {
    const GaussRule& rule = gauss_legendre(24);
    long double s = 0.0L;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = 0.5 * (rule.nodes[i] + 1.0);
        s += rule.weights[i] * 0.5 * (1.0 - t) * prob.phase(2, t * x);
    }
    return 2.0 * double(s);
}

// int_0^1 phi''(tx) dt
double mean_phi2(const OscillatoryProblem& prob, double x) {
    const GaussRule& rule = gauss_legendre(24);
    long double s = 0.0L;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = 0.5 * (rule.nodes[i] + 1.0);
        s += rule.weights[i] * 0.5 * prob.phase(2, t * x);
    }
    return double(s);
}

// Inverts y = sqrt(psi(x)) x by Newton; returns x(y).
double invert_map(const OscillatoryProblem& prob, double y) {
    double phi20 = prob.phase(2, 0.0);
    double x = y / std::sqrt(phi20);
    for (int it = 0; it < 60; ++it) {
        double ps = psi_of(prob, x);
        if (!(ps > 0)) throw precision_error("invert_map: psi non-positive", ps);
        double F = std::sqrt(ps) * x - y;
        if (std::abs(F) < 1e-15 * std::max(1.0, std::abs(y))) return x;
        double dydx = mean_phi2(prob, x) / std::sqrt(ps);
        x -= F / dydx;
    }
    throw precision_error("invert_map: Newton did not converge", 0.0);
}

// u(y) = a(x(y)) x_y(y) with x_y from the closed form.
double u_of(const OscillatoryProblem& prob, double y) {
    double x = invert_map(prob, y);
    double xy = std::sqrt(psi_of(prob, x)) / mean_phi2(prob, x);
    return prob.amplitude(x) * xy;
}

// m-th derivative (m even) of u at 0 by central differences with
// Richardson extrapolation over three halvings.
double central_deriv(const OscillatoryProblem& prob, int m, double h0) {
    auto stencil = [&](double h) {
        long double s = 0.0L;
        double binom = 1.0;
        for (int j = 0; j <= m; ++j) {
            double offset = (0.5 * m - j) * h;
            double sign = (j % 2) ? -1.0 : 1.0;
            s += sign * binom * u_of(prob, offset);
            binom = binom * (m - j) / (j + 1);
        }
        return double(s) / std::pow(h, m);
    };
    double d0 = stencil(h0);
    double d1 = stencil(h0 / 2.0);
    double d2 = stencil(h0 / 4.0);
    double r1 = (4.0 * d1 - d0) / 3.0;
    double r2 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

} // namespace

std::vector<std::complex<double>> stationary_phase_coefficients(
    const OscillatoryProblem& prob, int K) {
    if (K < 1) throw std::domain_error("stationary_phase_coefficients: K >= 1");
    if (!(prob.phase(2, 0.0) > 0))
        throw contract_error("stationary_phase_coefficients: phi''(0) must be > 0");
    std::vector<std::complex<double>> out;
    const std::complex<double> iu(0.0, 1.0);
    for (int k = 1; k <= K; ++k) {
        double d = central_deriv(prob, 2 * k, 0.05);
        out.push_back(std::pow(iu, k) * std::pow(2.0, -k) * d);
    }
    return out;
}

} // namespace slab
