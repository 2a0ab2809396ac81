#pragma once

#include <complex>
#include <vector>

namespace slab {

struct BesselPoint {
    double nu; // order, > -1/2
    double r;  // argument, > 0
};

enum class BesselRegion { Transitional, Oscillatory, Decaying, Other };

// |r - nu| <= r^{1/3}: transitional; r > nu + nu^{1/3}: oscillatory;
// nu > r + r^{1/3}: decaying.
BesselRegion region(const BesselPoint& p);

struct SchlafliResult {
    double jm;            // real part of the main oscillatory integral
    double jm_imag;       // residual imaginary part (should be ~0)
    double je;            // exponential correction term; 0 exactly for integer nu
    double j() const { return jm - je; }
};

// J_nu(r) = J^M - J^E from the two-term integral representation:
// J^M = (1/2pi) int_{-pi}^{pi} e^{i(r sin x - nu x)} dx,
// J^E = (sin(nu pi)/pi) int_0^inf e^{-nu tau - r sinh tau} dtau.
// Each piece is evaluated to absolute error <= tol.
SchlafliResult j_schlafli(const BesselPoint& p, double tol);

// Convenience: J_nu(r) to tol.
double j_bessel(const BesselPoint& p, double tol);

// (J_{nu-1} - J_{nu+1})/2; requires nu > 1/2.
double j_prime(const BesselPoint& p, double tol);

// theta(r) = sqrt(r^2 - nu^2) - nu arccos(nu/r) - pi/4, for r >= nu.
double theta(const BesselPoint& p);

// Closed form theta'(r) = sqrt(r^2 - nu^2)/r.
double theta_prime(const BesselPoint& p);

// r^{-1/3} (1 + r^{-1/3}|r - nu|)^{-1/4}; requires r, nu > 10.
double envelope_uniform_decay(const BesselPoint& p);

struct DecayRegionCheck {
    bool applicable; // nu - r > r^{1/3 + eps}
    double bound;    // r^{-K eps}, constant left symbolic
};

DecayRegionCheck decay_region_check(double nu, double r, double eps, int K);

// Calibrated ceiling (sup measured 0.183, +20% headroom) for
// |J_nu(r) - main| / remainder_envelope over the oscillatory region.
inline constexpr double kMainRatioCeiling = 0.22;

struct AsymptoticMain {
    double main;               // sqrt(2/pi) cos(theta) / (r^2 - nu^2)^{1/4}
    double remainder_envelope; // regime-selected bound for |J - main|
};

// Leading uniform asymptotic; requires nu > 10 and r > nu + nu^{1/3}.
AsymptoticMain asymptotic_main(const BesselPoint& p);

struct Expansion {
    std::vector<std::complex<double>> terms; // one per correction order k = 1..K
    double correction;                       // real correction = sum of 2 Re(terms)
    double tilde_envelope;                   // remainder bound after the corrections
};

// K-term correction beyond the leading asymptotic.  The expansion
// coefficients are extracted numerically from the recentred phase via
// the stationary-phase coefficient machinery.  integer_nu selects the
// sharper r^{-3/2} tail bound.
Expansion asymptotic_expansion(const BesselPoint& p, int K);

// Envelope report container shared by the scan commands.
struct EnvelopePoint {
    double nu, r, value, envelope, ratio;
};

struct EnvelopeReport {
    std::vector<EnvelopePoint> points;
    double sup_ratio = 0.0;
    double arg_nu = 0.0, arg_r = 0.0;

    void add(double nu, double r, double value, double envelope);
};

} // namespace slab
