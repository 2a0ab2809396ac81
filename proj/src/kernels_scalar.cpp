#include "slab/kernels.hpp"

namespace slab::kernels {

namespace {

void cmatmul_acc_scalar(const double* Are, const double* Aim,
                        const double* Bre, const double* Bim,
                        double* Cre, double* Cim,
                        std::size_t M, std::size_t K, std::size_t N) {
    for (std::size_t i = 0; i < M; ++i) {
        double* cr = Cre + i * N;
        double* ci = Cim + i * N;
        for (std::size_t k = 0; k < K; ++k) {
            const double ar = Are[i * K + k];
            const double ai = Aim[i * K + k];
            if (ar == 0.0 && ai == 0.0) continue;
            const double* br = Bre + k * N;
            const double* bi = Bim + k * N;
            for (std::size_t j = 0; j < N; ++j) {
                cr[j] += ar * br[j] - ai * bi[j];
                ci[j] += ar * bi[j] + ai * br[j];
            }
        }
    }
}

void crmatmul_acc_scalar(const double* Are, const double* Aim, const double* B,
                         double* Cre, double* Cim,
                         std::size_t M, std::size_t K, std::size_t N) {
    for (std::size_t i = 0; i < M; ++i) {
        double* cr = Cre + i * N;
        double* ci = Cim + i * N;
        for (std::size_t k = 0; k < K; ++k) {
            const double ar = Are[i * K + k];
            const double ai = Aim[i * K + k];
            if (ar == 0.0 && ai == 0.0) continue;
            const double* b = B + k * N;
            for (std::size_t j = 0; j < N; ++j) {
                cr[j] += ar * b[j];
                ci[j] += ai * b[j];
            }
        }
    }
}

double wsumsq_scalar(const double* re, const double* im, const double* w,
                     std::size_t n) {
    double s = 0.0;
    if (w) {
        for (std::size_t i = 0; i < n; ++i) s += w[i] * (re[i] * re[i] + im[i] * im[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) s += re[i] * re[i] + im[i] * im[i];
    }
    return s;
}

double max_abs2_scalar(const double* re, const double* im, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = re[i] * re[i] + im[i] * im[i];
        if (v > m) m = v;
    }
    return m;
}

void caxpy_scalar(double ar, double ai, const double* xre, const double* xim,
                  double* yre, double* yim, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        yre[i] += ar * xre[i] - ai * xim[i];
        yim[i] += ar * xim[i] + ai * xre[i];
    }
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{cmatmul_acc_scalar, crmatmul_acc_scalar, wsumsq_scalar,
                         max_abs2_scalar, caxpy_scalar, "scalar"};
    return ops;
}

} // namespace slab::kernels
