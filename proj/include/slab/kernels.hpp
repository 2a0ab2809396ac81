#pragma once

#include <cstddef>

// Hot inner loops behind the operator machinery: planar complex
// matrix products and weighted reductions.  Scalar reference
// implementations plus AVX2 variants selected once at startup;
// SLAB_FORCE_SCALAR=1 pins the reference path.
namespace slab::kernels {

struct Ops {
    // C(MxN) += A(MxK) * B(KxN), row-major planar complex.
    void (*cmatmul_acc)(const double* Are, const double* Aim,
                        const double* Bre, const double* Bim,
                        double* Cre, double* Cim,
                        std::size_t M, std::size_t K, std::size_t N);

    // C(MxN) += A(MxK) * B(KxN) with real B, row-major.
    void (*crmatmul_acc)(const double* Are, const double* Aim, const double* B,
                         double* Cre, double* Cim,
                         std::size_t M, std::size_t K, std::size_t N);

    // sum_i w[i] * (re[i]^2 + im[i]^2); w == nullptr means unit weights.
    double (*wsumsq)(const double* re, const double* im, const double* w,
                     std::size_t n);

    // max_i (re[i]^2 + im[i]^2)
    double (*max_abs2)(const double* re, const double* im, std::size_t n);

    // y += (ar + i*ai) * x, planar complex.
    void (*caxpy)(double ar, double ai, const double* xre, const double* xim,
                  double* yre, double* yim, std::size_t n);

    const char* name;
};

const Ops& scalar_ops();
const Ops& avx2_ops();
bool avx2_available();

// The active backend (AVX2 when the CPU supports it, unless overridden).
const Ops& ops();

} // namespace slab::kernels
