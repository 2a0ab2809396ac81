#include "slab/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "slab/errors.hpp"
#include "slab/oscillatory.hpp"
#include "slab/quadrature.hpp"

namespace slab {

namespace {

bool is_integer(double nu) { return std::nearbyint(nu) == nu; }

// sin(pi*nu) with exact range reduction; exactly 0 for integer nu.
double sinpi(double nu) {
    double k = std::nearbyint(nu);
    double f = nu - k;
    double s = std::sin(M_PI * f);
    return (std::fmod(k, 2.0) == 0.0) ? s : -s;
}

void check_point(const BesselPoint& p) {
    if (!(p.nu > -0.5)) throw std::domain_error("BesselPoint: nu must be > -1/2");
    if (!(p.r > 0)) throw std::domain_error("BesselPoint: r must be > 0");
}

} // namespace

BesselRegion region(const BesselPoint& p) {
    check_point(p);
    if (std::abs(p.r - p.nu) <= std::cbrt(p.r)) return BesselRegion::Transitional;
    if (p.r > p.nu + std::cbrt(p.nu)) return BesselRegion::Oscillatory;
    if (p.nu > p.r + std::cbrt(p.r)) return BesselRegion::Decaying;
    return BesselRegion::Other;
}

SchlafliResult j_schlafli(const BesselPoint& p, double tol) {
    check_point(p);
    if (!(tol > 0)) throw std::domain_error("j_schlafli: tol must be > 0");
    const double r = p.r, nu = p.nu;

    auto main_integrand = [r, nu](double x) {
        double ph = r * std::sin(x) - nu * x;
        return std::complex<double>(std::cos(ph), std::sin(ph));
    };
    QuadResult qm = integrate_panels(main_integrand, -M_PI, M_PI, r + std::abs(nu),
                                     tol * 2.0 * M_PI);
    SchlafliResult out;
    out.jm = qm.value.real() / (2.0 * M_PI);
    out.jm_imag = qm.value.imag() / (2.0 * M_PI);

    if (is_integer(nu)) {
        out.je = 0.0;
        return out;
    }
    const double s = sinpi(nu);
    // substitute tau = asinh(u/r): integrand e^{-nu asinh(u/r) - u} / sqrt(r^2+u^2)
    double U = std::max(2.0, std::log(10.0 / (tol * r))) + 5.0;
    auto tail_integrand = [r, nu](double u) {
        double v = std::exp(-nu * std::asinh(u / r) - u) / std::hypot(r, u);
        return std::complex<double>(v, 0.0);
    };
    QuadResult qe = integrate(tail_integrand, 0.0, U, tol * M_PI / std::abs(s));
    out.je = s / M_PI * qe.value.real();
    return out;
}

double j_bessel(const BesselPoint& p, double tol) {
    return j_schlafli(p, tol).j();
}

double j_prime(const BesselPoint& p, double tol) {
    check_point(p);
    if (!(p.nu > 0.5)) throw std::domain_error("j_prime: requires nu > 1/2");
    double lo = j_bessel({p.nu - 1.0, p.r}, tol);
    double hi = j_bessel({p.nu + 1.0, p.r}, tol);
    return 0.5 * (lo - hi);
}

double theta(const BesselPoint& p) {
    check_point(p);
    if (p.r < p.nu) throw std::domain_error("theta: requires r >= nu");
    double rad = std::sqrt((p.r - p.nu) * (p.r + p.nu));
    return rad - p.nu * std::acos(p.nu / p.r) - M_PI / 4.0;
}

double theta_prime(const BesselPoint& p) {
    check_point(p);
    if (p.r < p.nu) throw std::domain_error("theta_prime: requires r >= nu");
    return std::sqrt((p.r - p.nu) * (p.r + p.nu)) / p.r;
}

double envelope_uniform_decay(const BesselPoint& p) {
    check_point(p);
    if (!(p.r > 10 && p.nu > 10))
        throw std::domain_error("envelope_uniform_decay: requires r, nu > 10");
    double r13 = std::cbrt(p.r);
    return (1.0 / r13) * std::pow(1.0 + std::abs(p.r - p.nu) / r13, -0.25);
}

DecayRegionCheck decay_region_check(double nu, double r, double eps, int K) {
    if (!(nu > 10 && r > 10)) throw std::domain_error("decay_region_check: nu, r > 10");
    if (!(eps > 0) || K < 0) throw std::domain_error("decay_region_check: eps > 0, K >= 0");
    DecayRegionCheck c;
    c.applicable = (nu - r) > std::pow(r, 1.0 / 3.0 + eps);
    c.bound = std::pow(r, -double(K) * eps);
    return c;
}

namespace {

void check_oscillatory_region(const BesselPoint& p) {
    if (!(p.nu > 10)) throw std::domain_error("requires nu > 10");
    if (!(p.r > p.nu + std::cbrt(p.nu)))
        throw std::domain_error("requires r > nu + nu^{1/3}");
}

} // namespace

AsymptoticMain asymptotic_main(const BesselPoint& p) {
    check_oscillatory_region(p);
    const double r = p.r, nu = p.nu;
    double amp2 = (r - nu) * (r + nu);
    AsymptoticMain out;
    out.main = std::sqrt(2.0 / M_PI) * std::cos(theta(p)) / std::pow(amp2, 0.25);
    if (r >= 2.0 * nu)
        out.remainder_envelope = is_integer(nu) ? std::pow(r, -1.5) : 1.0 / r;
    else
        out.remainder_envelope = nu * nu / std::pow(amp2, 1.75) + 1.0 / r;
    return out;
}

Expansion asymptotic_expansion(const BesselPoint& p, int K) {
    check_oscillatory_region(p);
    if (K < 1) throw std::domain_error("asymptotic_expansion: K >= 1");
    const double r = p.r, nu = p.nu;
    const double c = nu / r;
    const double x0 = std::acos(c);
    const double lam = r * x0 * x0 * x0;

    // Recentred, sign-flipped phase with positive curvature at 0:
    // phihat(x) = x0^{-3} [phi(x0) - phi(x0 x + x0)], phi(z) = sin z - c z.
    auto phihat = [c, x0](int k, double x) -> double {
        double z = x0 * x + x0;
        switch (k) {
            case 0: return (std::sin(x0) - c * x0 - (std::sin(z) - c * z)) / (x0 * x0 * x0);
            case 1: return -(std::cos(z) - c) / (x0 * x0);
            case 2: return std::sin(z) / x0;
            case 3: return std::cos(z);
            case 4: return -std::sin(z) * x0;
            case 5: return -std::cos(z) * x0 * x0;
            case 6: return std::sin(z) * x0 * x0 * x0;
        }
        throw std::domain_error("phihat: derivative order out of range");
    };
    OscillatoryProblem prob;
    prob.phase = phihat;
    // plateau amplitude: == 1 near the stationary point
    prob.amplitude = [](double x) {
        double ax = std::abs(x);
        if (ax <= 0.5) return 1.0;
        if (ax >= 1.0) return 0.0;
        double u = (ax - 0.5) / 0.5;
        double s = u * u * u * (10.0 - 15.0 * u + 6.0 * u * u);
        return 1.0 - s;
    };
    prob.lambda = lam;

    auto coeffs = stationary_phase_coefficients(prob, K);

    Expansion out;
    const double th = theta(p);
    const std::complex<double> eith(std::cos(th), std::sin(th));
    double corr = 0.0;
    for (int k = 1; k <= K; ++k) {
        double fact = 1.0;
        for (int m = 2; m <= k; ++m) fact *= m;
        std::complex<double> term = (x0 / std::sqrt(2.0 * M_PI))
            * std::pow(lam, -k - 0.5) * eith * std::conj(coeffs[k - 1]) / fact;
        out.terms.push_back(term);
        corr += 2.0 * term.real();
    }
    out.correction = corr;

    bool int_nu = is_integer(nu);
    double trans = std::pow(r, 0.5 * K + 0.25) / std::pow(r - nu, 1.5 * K + 1.75);
    if (r >= 2.0 * nu) {
        out.tilde_envelope = int_nu ? std::pow(r, -1.5) : 1.0 / r;
    } else {
        out.tilde_envelope = int_nu ? trans : trans + 1.0 / r;
    }
    return out;
}

void EnvelopeReport::add(double nu, double r, double value, double envelope) {
    double ratio = std::abs(value) / envelope;
    points.push_back({nu, r, value, envelope, ratio});
    if (ratio > sup_ratio) {
        sup_ratio = ratio;
        arg_nu = nu;
        arg_r = r;
    }
}

} // namespace slab
