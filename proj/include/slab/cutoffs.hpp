#pragma once

namespace slab {

// Smooth even bump: 1 for |xi| <= 5/4, 0 for |xi| >= 8/5, quintic
// smoothstep in between.
double eta(double xi);

// chi_k(xi) = eta(xi / 2^k) - eta(xi / 2^{k-1})
double chi_k(int k, double xi);

// chi_0 support is {5/8 <= |xi| <= 8/5}
inline constexpr double kChi0Lo = 5.0 / 8.0;
inline constexpr double kChi0Hi = 8.0 / 5.0;

double chi0(double xi);

// gamma_1 = eta, gamma_2 = (1 - eta) 1_{x<0}, gamma_3 = (1 - eta) 1_{x>0};
// partition of unity on the line.
double gamma_j(int j, double x);

} // namespace slab
