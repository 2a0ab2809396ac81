#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace slab {

// I(lambda) = int e^{i lambda phi(x)} a(x) dx on [lo, hi].
// phase(k, x) returns the k-th derivative of phi (k <= 6, analytic);
// amplitude(x) returns a(x); its derivatives are formed by finite
// differences where a bound needs them.
struct OscillatoryProblem {
    std::function<double(int, double)> phase;
    std::function<double(double)> amplitude;
    double lambda = 1.0;
    double lo = -1.0;
    double hi = 1.0;
};

// Standard C-infinity bump a(x) = exp(1 - 1/(1-x^2)) on |x| < 1.
double bump(double x);
// Scaled/shifted variant supported on (c - w, c + w).
double bump_at(double x, double c, double w);

std::complex<double> eval_I(const OscillatoryProblem& prob, double tol);

struct VdcCheck {
    double lhs; // |numeric integral|
    double rhs; // lambda^{-1/k} [ |psi(hi)| + int |psi'| ], c_k omitted
};

// Verifies |phi^(k)| >= 1 on [lo, hi] by dense sampling (contract_error
// on failure), then evaluates both sides of the Van der Corput bound.
VdcCheck van_der_corput_check(const OscillatoryProblem& prob, int k);

struct StationaryPhaseResult {
    std::complex<double> leading;
    std::complex<double> remainder; // numeric I minus leading (minus terms)
    double remainder_bound;
    std::vector<std::complex<double>> higher_terms;
};

// Leading term sqrt(2pi/lambda) e^{i pi/4} a(0) / sqrt(phi''(0)) for a
// stationary point at x0 = 0 with phi(0) = phi'(0) = 0, phi'' ~ 1.
// With x0 != 0 the leading term picks up e^{i lambda phi(x0)} and the
// signature factor e^{i pi/4 sgn phi''(x0)}.
StationaryPhaseResult stationary_phase_leading(const OscillatoryProblem& prob,
                                               double tol = 1e-12, double x0 = 0.0);

// Expansion coefficients a_k = 2^{-k} i^k d^{2k}u(0), u(y) = a(x(y)) x_y(y),
// y = sqrt(psi(x)) x, psi(x) = 2 int_0^1 (1-t) phi''(tx) dt.  The map
// y -> x is inverted by Newton iteration; derivatives of u at 0 come from
// Richardson-extrapolated central differences.
std::vector<std::complex<double>> stationary_phase_coefficients(
    const OscillatoryProblem& prob, int K);

} // namespace slab
