#include "slab/kernels.hpp"

#include <cstdlib>

namespace slab::kernels {

bool avx2_available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const Ops& ops() {
    static const Ops& chosen = []() -> const Ops& {
        const char* force = std::getenv("SLAB_FORCE_SCALAR");
        if (force && force[0] == '1') return scalar_ops();
        return avx2_available() ? avx2_ops() : scalar_ops();
    }();
    return chosen;
}

} // namespace slab::kernels
