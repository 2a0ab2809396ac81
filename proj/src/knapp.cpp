#include "slab/knapp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slab/field.hpp"
#include "slab/parallel.hpp"
#include "slab/quadrature.hpp"

namespace slab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss-Legendre order for an integral over [-1, 1] whose phase moves
// at <= f radians per unit length; ~6 points per cycle plus slack,
// rounded up so the rule cache stays small.
int gl_order(double f) {
    const double cycles = 2.0 * f / (2.0 * kPi);
    int n = 12 + int(std::ceil(6.0 * cycles));
    return std::min(3000, (n + 7) & ~7);
}

std::complex<double> cis(double x) { return {std::cos(x), std::sin(x)}; }

// 1D oscillatory integral over [-1, 1] by a single adapted GL rule.
std::complex<double> gl_integral(double freq,
                                 const std::function<std::complex<double>(double)>& f) {
    const GaussRule& g = gauss_legendre(gl_order(freq));
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        s += g.weights[i] * f(g.nodes[i]);
    return s;
}

} // namespace

void KnappConfig::validate() const {
    if (d != 2 && d != 3) throw std::domain_error("knapp: d must be 2 or 3");
    if (!(delta > 0.0 && delta <= 0.125))
        throw std::domain_error("knapp: delta in (0, 1/8]");
    if (d == 3 && delta < 1.0 / 16.0)
        throw std::domain_error("knapp: d = 3 supported for delta >= 2^-4 only");
    if (!(a > 0.0) || a == 1.0) throw std::domain_error("knapp: a > 0, a != 1");
    if (!(q >= 1.0 && p >= 1.0 && s >= 1.0))
        throw std::domain_error("knapp: exponents >= 1");
    if (n_t < 2 || n_rho < 2 || n_theta < 8 || n_theta_tail < 4)
        throw std::domain_error("knapp: grid sizes too small");
}

double knapp_box_measure(int d, double delta) {
    const double c = kKnappBox * delta;
    // interval x interval (d = 2) or interval x disc (d = 3)
    return d == 2 ? 4.0 * c * c : 2.0 * c * kPi * c * c;
}

double knapp_f_l2(int d, double delta) {
    return std::sqrt(knapp_box_measure(d, delta));
}

std::complex<double> knapp_extension(const KnappConfig& cfg, double t,
                                     double x1, double xp) {
    const double c = kKnappBox * cfg.delta;
    const double a = cfg.a;
    xp = std::abs(xp);

    if (cfg.d == 2) {
        // frequency bounds in the two box directions
        double fu = 0.0, fv = 0.0;
        for (int iu = -1; iu <= 1; ++iu) {
            for (int iv = -1; iv <= 1; ++iv) {
                const double xi1 = 1.0 + c * iu, xi2 = c * iv;
                const double nrm = std::hypot(xi1, xi2);
                const double g = t * a * std::pow(nrm, a - 2.0);
                fu = std::max(fu, c * std::abs(g * xi1 + x1));
                fv = std::max(fv, c * std::abs(g * xi2 + xp));
            }
        }
        if (a == 2.0) {
            // |xi|^2 separates, so the box integral is a product
            auto iu = gl_integral(fu, [&](double u) {
                const double xi1 = 1.0 + c * u;
                return cis(t * xi1 * xi1 + x1 * xi1);
            });
            auto iv = gl_integral(fv, [&](double v) {
                const double xi2 = c * v;
                return cis(t * xi2 * xi2 + xp * xi2);
            });
            return c * c * iu * iv;
        }
        const GaussRule& gu = gauss_legendre(gl_order(fu));
        const GaussRule& gv = gauss_legendre(gl_order(fv));
        std::complex<double> s{0.0, 0.0};
        for (std::size_t i = 0; i < gu.nodes.size(); ++i) {
            const double xi1 = 1.0 + c * gu.nodes[i];
            std::complex<double> row{0.0, 0.0};
            for (std::size_t j = 0; j < gv.nodes.size(); ++j) {
                const double xi2 = c * gv.nodes[j];
                const double ph =
                    t * std::pow(std::hypot(xi1, xi2), a) + x1 * xi1 + xp * xi2;
                row += gv.weights[j] * cis(ph);
            }
            s += gu.weights[i] * row;
        }
        return c * c * s;
    }

    // d = 3: the xi' disc integrates exactly in angle to a J_0 factor:
    // F = c int du int_0^{c} m 2 pi J_0(xp m) e^{i(t |xi|^a + x1 xi1)} dm
    double fu = 0.0, fm = 0.0;
    for (int iu = -1; iu <= 1; ++iu) {
        for (int im = 0; im <= 2; ++im) {
            const double xi1 = 1.0 + c * iu, m = 0.5 * c * im;
            const double nrm = std::hypot(xi1, m);
            const double g = t * a * std::pow(nrm, a - 2.0);
            fu = std::max(fu, c * std::abs(g * xi1 + x1));
            fm = std::max(fm, 0.5 * c * (std::abs(g * m) + xp));
        }
    }
    const GaussRule& gu = gauss_legendre(gl_order(fu));
    const GaussRule& gm = gauss_legendre(gl_order(fm));
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < gm.nodes.size(); ++j) {
        const double m = 0.5 * c * (gm.nodes[j] + 1.0);  // [0, c]
        const double bes = 2.0 * kPi * m * std::cyl_bessel_j(0.0, xp * m);
        std::complex<double> col{0.0, 0.0};
        for (std::size_t i = 0; i < gu.nodes.size(); ++i) {
            const double xi1 = 1.0 + c * gu.nodes[i];
            const double ph = t * std::pow(std::hypot(xi1, m), a) + x1 * xi1;
            col += gu.weights[i] * cis(ph);
        }
        s += gm.weights[j] * bes * col;
    }
    return c * (0.5 * c) * s;
}

double knapp_ratio(const KnappConfig& cfg) {
    cfg.validate();
    const double delta = cfg.delta;
    const double inv2 = 1.0 / (delta * delta);

    // angular nodes on [0, pi]: fine uniform part over the
    // concentration width, geometric tail out to pi
    struct Node {
        double theta, w;
    };
    std::vector<Node> ang;
    const double theta0 = std::min(kPi, 16.0 * delta);
    const int nf = std::max(4, cfg.n_theta / 2);
    const double hf = theta0 / nf;
    for (int i = 0; i <= nf; ++i) {
        const double w = hf * ((i == 0 || i == nf) ? 0.5 : 1.0);
        ang.push_back({i * hf, w});
    }
    if (theta0 < kPi) {
        const int ntail = cfg.n_theta_tail;
        const double g = std::pow(kPi / theta0, 1.0 / ntail);
        double prev = theta0;
        for (int j = 1; j <= ntail; ++j) {
            const double th = theta0 * std::pow(g, j);
            const double seg = th - prev;
            ang[ang.size() - 1].w += 0.5 * seg;
            ang.push_back({th, 0.5 * seg});
            prev = th;
        }
    }
    for (auto& nd : ang)
        nd.w = cfg.d == 2 ? 2.0 * nd.w : nd.w * 2.0 * kPi * std::sin(nd.theta);

    // |t| in [delta^-2, 2 delta^-2], t < 0 so the radial window sits at
    // positive x1 = rho ~ a|t|
    const int nt = cfg.n_t;
    const double dt = inv2 / (nt - 1);
    std::vector<double> tnorm(nt, 0.0);

    parallel_for(std::size_t(nt), cfg.threads, [&](std::size_t i) {
        const double t = -(inv2 + double(i) * dt);
        const double rho0 = cfg.a * std::abs(t);
        const int nr = cfg.n_rho;
        const double drho = (1.0 / delta) / (nr - 1);
        long double sp = 0.0L;
        for (int l = 0; l < nr; ++l) {
            const double rho = rho0 + l * drho;
            long double ss = 0.0L;
            for (const Node& nd : ang) {
                const double x1 = rho * std::cos(nd.theta);
                const double xp = rho * std::sin(nd.theta);
                const double av = std::abs(knapp_extension(cfg, t, x1, xp));
                ss += nd.w * std::pow(av, cfg.s);
            }
            const double as = std::pow(double(ss), 1.0 / cfg.s);
            const double wr = drho * ((l == 0 || l == nr - 1) ? 0.5 : 1.0);
            sp += wr * std::pow(rho, cfg.d - 1) * std::pow(as, cfg.p);
        }
        tnorm[i] = std::pow(double(sp), 1.0 / cfg.p);
    });

    long double sq = 0.0L;
    for (int i = 0; i < nt; ++i) {
        const double wt = dt * ((i == 0 || i == nt - 1) ? 0.5 : 1.0);
        sq += wt * std::pow(tnorm[i], cfg.q);
    }
    const double norm = std::pow(double(sq), 1.0 / cfg.q);
    return norm / knapp_f_l2(cfg.d, delta);
}

std::string knapp_verdict(const SlopeFit& fit) {
    if (fit.slope < -2.0 * fit.stderr_slope) return "violated";
    if (fit.slope > 2.0 * fit.stderr_slope) return "consistent";
    return "inconclusive";
}

KnappScanResult knapp_scan(const KnappConfig& cfg, int kmin, int kmax) {
    if (kmin > kmax || kmin < 3)
        throw std::domain_error("knapp_scan: need 3 <= kmin <= kmax");
    KnappScanResult res;
    res.cfg = cfg;
    res.kmin = kmin;
    res.kmax = kmax;
    res.predicted = 0.5 * cfg.d - 2.0 / cfg.q - (2.0 * cfg.d - 1.0) / cfg.p +
                    (cfg.d - 1.0) / cfg.s;

    std::vector<double> ds, ratios, fs;
    for (int k = kmin; k <= kmax; ++k) {
        KnappConfig c = cfg;
        c.delta = std::ldexp(1.0, -k);
        res.rows.push_back(
            {c.delta, knapp_ratio(c), knapp_f_l2(cfg.d, c.delta)});
        ds.push_back(c.delta);
        ratios.push_back(res.rows.back().ratio);
        fs.push_back(res.rows.back().f_l2);
    }
    res.fit = fit_loglog(ds, ratios, 2.0);
    res.f_fit = fit_loglog(ds, fs, 2.0);
    res.verdict = knapp_verdict(res.fit);
    return res;
}

} // namespace slab
