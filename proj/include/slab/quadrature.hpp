#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace slab {

// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

struct QuadResult {
    std::complex<double> value;
    double err_est;
    int panels;
};

// Panel-based Gauss-Legendre for integrands whose local frequency is
// bounded by freq_bound (radians per unit length).  The initial panel
// count keeps the phase change per panel small; panels are then doubled
// until successive values agree to tol.  Throws precision_error when
// the node budget runs out.
QuadResult integrate_panels(const std::function<std::complex<double>(double)>& f,
                            double a, double b, double freq_bound, double tol,
                            long max_evals = (1 << 24));

// Convenience wrapper for smooth non-oscillatory integrands.
QuadResult integrate(const std::function<std::complex<double>(double)>& f,
                     double a, double b, double tol);

// Composite Simpson on a fixed grid of n+1 points (n even).  Used as the
// brute-force oracle route, deliberately independent of the panel engine.
std::complex<double> simpson(const std::function<std::complex<double>(double)>& f,
                             double a, double b, long n);

} // namespace slab
