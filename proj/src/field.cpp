#include "slab/field.hpp"

#include <cmath>
#include <stdexcept>

#include "slab/cutoffs.hpp"
#include "slab/kernels.hpp"

namespace slab {

double mixed_norm(const SampledField& u, double q, double p, bool radial_weight) {
    if (!(q >= 1) || !(p >= 1)) throw std::domain_error("mixed_norm: q, p >= 1");
    const std::size_t nt = u.t.n, nr = u.r.n;
    const double dr = u.r.step(), dt = u.t.step();

    std::vector<double> rw(nr, 1.0);
    for (std::size_t j = 0; j < nr; ++j) {
        double w = (j == 0 || j == nr - 1) ? 0.5 : 1.0;
        if (radial_weight) w *= std::pow(u.r.point(j), u.d - 1);
        rw[j] = w * dr;
    }

    std::vector<double> inner(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const double* re = u.re.data() + i * nr;
        const double* im = u.im.data() + i * nr;
        if (p == kInf) {
            inner[i] = std::sqrt(kernels::ops().max_abs2(re, im, nr));
        } else if (p == 2.0) {
            inner[i] = std::sqrt(kernels::ops().wsumsq(re, im, rw.data(), nr));
        } else {
            long double s = 0.0L;
            for (std::size_t j = 0; j < nr; ++j) {
                double a2 = re[j] * re[j] + im[j] * im[j];
                s += rw[j] * std::pow(a2, 0.5 * p);
            }
            inner[i] = std::pow(double(s), 1.0 / p);
        }
    }

    if (q == kInf) {
        double m = 0.0;
        for (double v : inner) m = std::max(m, v);
        return m;
    }
    long double s = 0.0L;
    for (std::size_t i = 0; i < nt; ++i) {
        double w = (i == 0 || i == nt - 1) ? 0.5 : 1.0;
        s += w * std::pow(inner[i], q) * dt;
    }
    return std::pow(double(s), 1.0 / q);
}

RadialProfile RadialProfile::zeros(std::size_t n) {
    RadialProfile h;
    h.grid = {kChi0Lo / 2.0, kChi0Hi * 2.0, n};
    h.re.assign(n, 0.0);
    h.im.assign(n, 0.0);
    return h;
}

double RadialProfile::l2_norm() const {
    const double dr = grid.step();
    long double s = 0.0L;
    for (std::size_t i = 0; i < grid.n; ++i) {
        double w = (i == 0 || i == grid.n - 1) ? 0.5 : 1.0;
        s += w * (re[i] * re[i] + im[i] * im[i]) * dr;
    }
    return std::sqrt(double(s));
}

} // namespace slab
