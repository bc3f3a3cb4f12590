#include "twoswitch/bitkernels.hpp"

#include <bit>

namespace twoswitch::kernels {

uint64_t popcount_scalar(const uint64_t* a, std::size_t words) {
    uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

uint64_t popcount_and_scalar(const uint64_t* a, const uint64_t* b, std::size_t words) {
    uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

uint64_t popcount_and3_scalar(const uint64_t* a, const uint64_t* b, const uint64_t* c,
                              std::size_t words) {
    uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i] & c[i]);
    return total;
}

} // namespace twoswitch::kernels
