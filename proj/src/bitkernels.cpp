#include "twoswitch/bitkernels.hpp"

namespace twoswitch::kernels {

namespace {

Dispatch select() {
#if defined(TWOSWITCH_HAS_AVX2_KERNELS)
    if (__builtin_cpu_supports("avx2")) {
        return {popcount_avx2, popcount_and_avx2, popcount_and3_avx2, "avx2"};
    }
#endif
    return {popcount_scalar, popcount_and_scalar, popcount_and3_scalar, "scalar"};
}

} // namespace

const Dispatch& active_dispatch() {
    static const Dispatch d = select();
    return d;
}

} // namespace twoswitch::kernels
