#pragma once

#include <complex>
#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "slab/field.hpp"
#include "slab/report.hpp"

namespace slab {

// nu(k) = (d - 2 + 2k) / 2 for the k-th spherical-harmonic block.
double spherical_order(int d, int k);
// c_{d,k} = (2 pi)^{d/2} i^{-k}
std::complex<double> spherical_coeff(int d, int k);

// Uniform lookup table of J_nu on [0, x_max], Catmull-Rom interpolated.
// Step 2 pi / 64 keeps the interpolation error ~1e-6 while the fill
// stays a one-time cost even for x_max in the thousands.
class BesselTable {
public:
    BesselTable(double nu, double x_max, double tol = 1e-8);
    double operator()(double x) const;
    double nu() const { return nu_; }
    double x_max() const { return x_max_; }

private:
    double nu_;
    double x_max_;
    double step_;
    std::vector<double> vals_;
};

enum class OperatorKind { T, S_R, S_R_j };

struct OperatorConfig {
    OperatorKind kind = OperatorKind::S_R;
    double a = 2.0;
    double nu = 0.0;
    int d = 2;
    double R = 32.0;      // S_R variants only
    double lambda = 0.0;  // S_R_j only
    int gamma_index = 1;  // S_R_j only: 1, 2 or 3
    Grid t_grid{0.0, 1.0, 2};
    Grid r_grid{0.0, 1.0, 2};
    std::size_t n_rho = 0;  // 0: pick from R
    double tol = 1e-8;
};

Grid default_t_grid(double R);
Grid default_r_grid(double R);
std::size_t default_n_rho(double R);

// u(t,r) = cutoff(r) * sum_k w_k e^{-i t rho_k^a} K(rho_k, r) h(rho_k),
// factored into a phase matrix E (t x rho) and a real kernel matrix
// A (rho x r) that already carries the quadrature weights and cutoffs.
// apply() is then E * diag(h) * A, two dense passes through the hot
// kernels.
class DiscretizedOperator {
public:
    // table, if given, must cover max r*rho over the grids; otherwise a
    // private table is built.
    explicit DiscretizedOperator(const OperatorConfig& cfg,
                                 const BesselTable* table = nullptr);

    const OperatorConfig& config() const { return cfg_; }
    const Grid& rho_grid() const { return rho_; }
    bool lambda_warning() const { return lambda_warning_; }
    bool all_zero() const { return all_zero_; }

    // h sampled on its own grid; interpolated onto the rho nodes.
    SampledField apply(const RadialProfile& h) const;

    // Discrete-level apply: h given directly at the rho nodes.
    SampledField apply_rho(const std::vector<std::complex<double>>& h) const;

    // L^2(d rho) norm of a discrete profile (trapezoid).
    double rho_norm(const std::vector<std::complex<double>>& h) const;

    // Adjoint of apply_rho between L^2(d rho) and the (plain-measure)
    // discrete L^2_t L^2_r inner product; used by power iteration.
    std::vector<std::complex<double>> apply_adjoint(const SampledField& u) const;

    // Profile maximizing |u(t_i, r_j)| / ||h||_2 over h, and that ratio
    // (Cauchy-Schwarz against the discrete kernel row).
    std::vector<std::complex<double>> matched_profile(std::size_t ti,
                                                      std::size_t rj) const;
    double row_bound(std::size_t ti, std::size_t rj) const;

private:
    OperatorConfig cfg_;
    Grid rho_;
    bool lambda_warning_ = false;
    bool all_zero_ = true;
    std::vector<double> ere_, eim_;  // phase matrix, t x rho
    std::vector<double> a_;          // kernel matrix (weights folded), rho x r
    std::vector<double> wrho_;       // trapezoid rho weights
    mutable std::vector<double> at_; // kernel transpose, built on first adjoint
    mutable std::mutex at_mutex_;
};

struct OpnormOptions {
    double q = 2.0;
    double p = 2.0;
    int ensemble = 12;
    int power_iters = 8;  // used only when q = p = 2
    std::uint64_t seed = 1;
    int threads = 1;
    bool radial_weight = false;  // measure output in plain L^q_t L^p_r
};

// Seeded-ensemble lower bound on the operator norm; power-iteration
// refinement when q = p = 2.
double opnorm_estimate(const DiscretizedOperator& op, const OpnormOptions& opt);

struct DyadicScanConfig {
    double a = 2.0;
    int d = 3;
    double q = 2.0;
    double p = 4.0;
    std::vector<double> nus{10.0, 50.0, 200.0};
    int jmin = 5;
    int jmax = 10;
    std::string lambda_rule = "R^{1/2+eps}";
    double eps = 0.05;
    int ensemble = 12;
    std::uint64_t seed = 1;
    int threads = 1;
    double tol = 1e-8;
};

struct DyadicScanRow {
    double nu;
    double R;
    double opnorm;
    double weighted;  // R^{(d-1)/p - (d-2)/2} * opnorm
};

struct DyadicScanResult {
    DyadicScanConfig cfg;
    double weight_exponent;
    std::vector<DyadicScanRow> rows;
    std::vector<SlopeFit> fits;       // one per nu, log2 weighted vs log2 R
    std::vector<double> constants;    // per nu: max_R weighted
    double spread;                    // max constant / min constant
};

DyadicScanResult dyadic_scan(const DyadicScanConfig& cfg);

struct Lemma34Config {
    int nu = 50;
    int jmin = 5;
    int jmax = 10;
    double eps = 0.1;
    int N = 2;
    int ensemble = 12;
    std::uint64_t seed = 1;
    int threads = 1;
    double tol = 1e-8;
};

struct Lemma34Row {
    double R;
    double lambda;  // 100 R^{1/3 + eps}
    double opnorm;
    bool all_zero;
};

struct Lemma34Result {
    Lemma34Config cfg;
    std::vector<Lemma34Row> rows;
    bool fit_valid = false;  // >= 2 rows with nonvanishing kernel
    SlopeFit fit;
    double predicted_slope;  // -N * eps
};

Lemma34Result lemma34_scan(const Lemma34Config& cfg);

} // namespace slab
