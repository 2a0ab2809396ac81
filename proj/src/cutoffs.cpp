#include "slab/cutoffs.hpp"

#include <cmath>
#include <stdexcept>

namespace slab {

double eta(double xi) {
    double a = std::abs(xi);
    if (a <= 1.25) return 1.0;
    if (a >= 1.6) return 0.0;
    double u = (a - 1.25) / 0.35;
    double s = u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
    return 1.0 - s;
}

double chi_k(int k, double xi) {
    return eta(std::ldexp(xi, -k)) - eta(std::ldexp(xi, -(k - 1)));
}

double chi0(double xi) { return chi_k(0, xi); }

double gamma_j(int j, double x) {
    switch (j) {
        case 1: return eta(x);
        case 2: return x < 0 ? 1.0 - eta(x) : 0.0;
        case 3: return x > 0 ? 1.0 - eta(x) : 0.0;
    }
    throw std::domain_error("gamma_j: j must be 1, 2 or 3");
}

} // namespace slab
