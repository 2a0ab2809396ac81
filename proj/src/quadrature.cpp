#include "slab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "slab/errors.hpp"

namespace slab {

namespace {

GaussRule compute_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on Legendre polynomials, Chebyshev initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

namespace {

std::complex<double> sum_panels(const std::function<std::complex<double>(double)>& f,
                                double a, double b, int panels, const GaussRule& rule) {
    const double w = (b - a) / panels;
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        const double mid = lo + 0.5 * w;
        const double half = 0.5 * w;
        long double pre = 0.0L, pim = 0.0L;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            std::complex<double> v = f(mid + half * rule.nodes[i]);
            pre += rule.weights[i] * v.real();
            pim += rule.weights[i] * v.imag();
        }
        acc_re += pre * half;
        acc_im += pim * half;
    }
    return {double(acc_re), double(acc_im)};
}

} // namespace

QuadResult integrate_panels(const std::function<std::complex<double>(double)>& f,
                            double a, double b, double freq_bound, double tol,
                            long max_evals) {
    const int order = 16;
    const GaussRule& rule = gauss_legendre(order);
    // keep the phase change per panel below ~2 cycles
    int panels = 1;
    double cycles = (b - a) * freq_bound / (2.0 * M_PI);
    if (cycles > 2.0) panels = int(std::ceil(cycles / 2.0));
    std::complex<double> prev = sum_panels(f, a, b, panels, rule);
    long evals = long(panels) * order;
    for (;;) {
        panels *= 2;
        evals += long(panels) * order;
        if (evals > max_evals)
            throw precision_error("integrate_panels: node budget exhausted", tol);
        std::complex<double> cur = sum_panels(f, a, b, panels, rule);
        double err = std::abs(cur - prev);
        if (err < tol) return {cur, err, panels};
        prev = cur;
    }
}

QuadResult integrate(const std::function<std::complex<double>(double)>& f,
                     double a, double b, double tol) {
    return integrate_panels(f, a, b, 0.0, tol);
}

std::complex<double> simpson(const std::function<std::complex<double>(double)>& f,
                             double a, double b, long n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    long double sre = f(a).real() + f(b).real();
    long double sim = f(a).imag() + f(b).imag();
    for (long i = 1; i < n; ++i) {
        std::complex<double> v = f(a + i * h);
        double c = (i % 2) ? 4.0 : 2.0;
        sre += c * v.real();
        sim += c * v.imag();
    }
    return {double(sre * h / 3.0L), double(sim * h / 3.0L)};
}

} // namespace slab
