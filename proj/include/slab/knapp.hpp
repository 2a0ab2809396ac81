#pragma once

#include <complex>
#include <string>
#include <vector>

#include "slab/report.hpp"

namespace slab {

struct KnappConfig {
    int d = 2;
    double a = 2.0;
    double delta = 1.0 / 16.0;
    double q = 2.0;
    double p = 8.0;
    double s = 2.0;
    // grid sizes for the ratio computation
    int n_t = 64;
    int n_rho = 64;
    int n_theta = 64;       // fine angular nodes over |theta| <= 16 delta
    int n_theta_tail = 48;  // geometric nodes out to theta = pi
    int threads = 1;

    void validate() const;
};

// Half-width of the frequency box D in units of delta: D = {|xi_1 - 1|
// <= c delta, |xi'| <= c delta}.  c = 1/2 keeps the phase spread over D
// on the concentration set below one radian.
inline constexpr double kKnappBox = 0.5;

double knapp_box_measure(int d, double delta);  // |D|
double knapp_f_l2(int d, double delta);         // |D|^{1/2}

// Extension of 1_D at (t, x), x = (x1, x') with |x'| = xp: direct
// quadrature over D, Gauss-Legendre order adapted to the phase spread.
// For d = 3 the angular part of the x'-integral is exact (a J_0 factor).
std::complex<double> knapp_extension(const KnappConfig& cfg, double t,
                                     double x1, double xp);

// L^q_t L^p_rho L^s_omega norm of the extension over the concentration
// set (t in -[delta^-2, 2 delta^-2], per-t radial window rho in
// (a|t|, a|t| + delta^-1), full angular circle/sphere), divided by
// ||f||_2.
double knapp_ratio(const KnappConfig& cfg);

struct KnappScanRow {
    double delta;
    double ratio;
    double f_l2;
};

struct KnappScanResult {
    KnappConfig cfg;
    int kmin = 3, kmax = 6;  // delta = 2^-k
    std::vector<KnappScanRow> rows;
    SlopeFit fit;     // log2 ratio against log2 delta
    SlopeFit f_fit;   // log2 ||f||_2 against log2 delta (should be d/2)
    double predicted; // d/2 - 2/q - (2d-1)/p + (d-1)/s
    std::string verdict;
};

// delta = 2^-k for k in [kmin, kmax]; cfg.delta is ignored.
KnappScanResult knapp_scan(const KnappConfig& cfg, int kmin, int kmax);

// violated if slope < -2 stderr, consistent if > +2 stderr, else
// inconclusive.
std::string knapp_verdict(const SlopeFit& fit);

} // namespace slab
