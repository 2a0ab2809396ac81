#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace slab {

struct Grid {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t n = 2;

    double step() const { return (hi - lo) / double(n - 1); }
    double point(std::size_t i) const { return lo + double(i) * step(); }
};

// Values u(t_i, r_j) on a rectangular grid, planar complex storage,
// t-major (row i = time slice).
struct SampledField {
    Grid t;
    Grid r;
    int d = 2;
    std::vector<double> re;
    std::vector<double> im;

    SampledField() = default;
    SampledField(Grid tg, Grid rg, int dim)
        : t(tg), r(rg), d(dim), re(tg.n * rg.n, 0.0), im(tg.n * rg.n, 0.0) {}

    std::size_t idx(std::size_t i, std::size_t j) const { return i * r.n + j; }
    std::complex<double> at(std::size_t i, std::size_t j) const {
        return {re[idx(i, j)], im[idx(i, j)]};
    }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// L^q_t of L^p_r (trapezoid), with the r^{d-1} radial weight when
// radial_weight is set; q or p = kInf takes the grid max.
double mixed_norm(const SampledField& u, double q, double p,
                  bool radial_weight = true);

// Radial profile h(rho) sampled on a uniform grid that covers the
// chi_0 support with margin on both sides.
struct RadialProfile {
    Grid grid;
    std::vector<double> re;
    std::vector<double> im;

    static RadialProfile zeros(std::size_t n);
    std::size_t n() const { return grid.n; }
    double l2_norm() const; // trapezoid L^2 over the grid
};

} // namespace slab
