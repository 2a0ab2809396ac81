#include "slab/kernels.hpp"

#include <immintrin.h>

namespace slab::kernels {

namespace {

void cmatmul_acc_avx2(const double* Are, const double* Aim,
                      const double* Bre, const double* Bim,
                      double* Cre, double* Cim,
                      std::size_t M, std::size_t K, std::size_t N) {
    const std::size_t N4 = N & ~std::size_t(3);
    for (std::size_t i = 0; i < M; ++i) {
        double* cr = Cre + i * N;
        double* ci = Cim + i * N;
        for (std::size_t k = 0; k < K; ++k) {
            const double ar = Are[i * K + k];
            const double ai = Aim[i * K + k];
            if (ar == 0.0 && ai == 0.0) continue;
            const double* br = Bre + k * N;
            const double* bi = Bim + k * N;
            const __m256d var = _mm256_set1_pd(ar);
            const __m256d vai = _mm256_set1_pd(ai);
            std::size_t j = 0;
            for (; j < N4; j += 4) {
                __m256d vbr = _mm256_loadu_pd(br + j);
                __m256d vbi = _mm256_loadu_pd(bi + j);
                __m256d vcr = _mm256_loadu_pd(cr + j);
                __m256d vci = _mm256_loadu_pd(ci + j);
                vcr = _mm256_fmadd_pd(var, vbr, vcr);
                vcr = _mm256_fnmadd_pd(vai, vbi, vcr);
                vci = _mm256_fmadd_pd(var, vbi, vci);
                vci = _mm256_fmadd_pd(vai, vbr, vci);
                _mm256_storeu_pd(cr + j, vcr);
                _mm256_storeu_pd(ci + j, vci);
            }
            for (; j < N; ++j) {
                cr[j] += ar * br[j] - ai * bi[j];
                ci[j] += ar * bi[j] + ai * br[j];
            }
        }
    }
}

void crmatmul_acc_avx2(const double* Are, const double* Aim, const double* B,
                       double* Cre, double* Cim,
                       std::size_t M, std::size_t K, std::size_t N) {
    const std::size_t N4 = N & ~std::size_t(3);
    for (std::size_t i = 0; i < M; ++i) {
        double* cr = Cre + i * N;
        double* ci = Cim + i * N;
        for (std::size_t k = 0; k < K; ++k) {
            const double ar = Are[i * K + k];
            const double ai = Aim[i * K + k];
            if (ar == 0.0 && ai == 0.0) continue;
            const double* b = B + k * N;
            const __m256d var = _mm256_set1_pd(ar);
            const __m256d vai = _mm256_set1_pd(ai);
            std::size_t j = 0;
            for (; j < N4; j += 4) {
                __m256d vb = _mm256_loadu_pd(b + j);
                __m256d vcr = _mm256_loadu_pd(cr + j);
                __m256d vci = _mm256_loadu_pd(ci + j);
                vcr = _mm256_fmadd_pd(var, vb, vcr);
                vci = _mm256_fmadd_pd(vai, vb, vci);
                _mm256_storeu_pd(cr + j, vcr);
                _mm256_storeu_pd(ci + j, vci);
            }
            for (; j < N; ++j) {
                cr[j] += ar * b[j];
                ci[j] += ai * b[j];
            }
        }
    }
}

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

double wsumsq_avx2(const double* re, const double* im, const double* w,
                   std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    if (w) {
        for (; i < n4; i += 4) {
            __m256d vr = _mm256_loadu_pd(re + i);
            __m256d vi = _mm256_loadu_pd(im + i);
            __m256d vw = _mm256_loadu_pd(w + i);
            __m256d m = _mm256_fmadd_pd(vi, vi, _mm256_mul_pd(vr, vr));
            acc = _mm256_fmadd_pd(vw, m, acc);
        }
        double s = hsum(acc);
        for (; i < n; ++i) s += w[i] * (re[i] * re[i] + im[i] * im[i]);
        return s;
    }
    for (; i < n4; i += 4) {
        __m256d vr = _mm256_loadu_pd(re + i);
        __m256d vi = _mm256_loadu_pd(im + i);
        acc = _mm256_fmadd_pd(vr, vr, acc);
        acc = _mm256_fmadd_pd(vi, vi, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += re[i] * re[i] + im[i] * im[i];
    return s;
}

double max_abs2_avx2(const double* re, const double* im, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d vr = _mm256_loadu_pd(re + i);
        __m256d vi = _mm256_loadu_pd(im + i);
        __m256d m = _mm256_fmadd_pd(vi, vi, _mm256_mul_pd(vr, vr));
        vmax = _mm256_max_pd(vmax, m);
    }
    __m128d lo = _mm256_castpd256_pd128(vmax);
    __m128d hi = _mm256_extractf128_pd(vmax, 1);
    lo = _mm_max_pd(lo, hi);
    double m = _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) {
        double v = re[i] * re[i] + im[i] * im[i];
        if (v > m) m = v;
    }
    return m;
}

void caxpy_avx2(double ar, double ai, const double* xre, const double* xim,
                double* yre, double* yim, std::size_t n) {
    const std::size_t n4 = n & ~std::size_t(3);
    const __m256d var = _mm256_set1_pd(ar);
    const __m256d vai = _mm256_set1_pd(ai);
    std::size_t i = 0;
    for (; i < n4; i += 4) {
        __m256d vxr = _mm256_loadu_pd(xre + i);
        __m256d vxi = _mm256_loadu_pd(xim + i);
        __m256d vyr = _mm256_loadu_pd(yre + i);
        __m256d vyi = _mm256_loadu_pd(yim + i);
        vyr = _mm256_fmadd_pd(var, vxr, vyr);
        vyr = _mm256_fnmadd_pd(vai, vxi, vyr);
        vyi = _mm256_fmadd_pd(var, vxi, vyi);
        vyi = _mm256_fmadd_pd(vai, vxr, vyi);
        _mm256_storeu_pd(yre + i, vyr);
        _mm256_storeu_pd(yim + i, vyi);
    }
    for (; i < n; ++i) {
        yre[i] += ar * xre[i] - ai * xim[i];
        yim[i] += ar * xim[i] + ai * xre[i];
    }
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops{cmatmul_acc_avx2, crmatmul_acc_avx2, wsumsq_avx2,
                         max_abs2_avx2, caxpy_avx2, "avx2"};
    return ops;
}

} // namespace slab::kernels
