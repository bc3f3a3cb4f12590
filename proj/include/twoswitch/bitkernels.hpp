#pragma once

#include <cstddef>
#include <cstdint>

// Word-level reduction kernels behind adjacency bit-rows: population counts of
// rows and of 2- or 3-way row intersections. These are the inner loops of the
// order-4 census helpers, triangle/4-cycle counting and neighborhood tests.
//
// A scalar reference implementation always exists; on x86-64 an AVX2 variant
// is selected at runtime when the CPU supports it. Both variants must agree
// bit for bit (equivalence-tested), so callers never care which one runs.

namespace twoswitch::kernels {

uint64_t popcount_scalar(const uint64_t* a, std::size_t words);
uint64_t popcount_and_scalar(const uint64_t* a, const uint64_t* b, std::size_t words);
uint64_t popcount_and3_scalar(const uint64_t* a, const uint64_t* b, const uint64_t* c,
                              std::size_t words);

#if defined(__x86_64__) || defined(_M_X64)
#define TWOSWITCH_HAS_AVX2_KERNELS 1
uint64_t popcount_avx2(const uint64_t* a, std::size_t words);
uint64_t popcount_and_avx2(const uint64_t* a, const uint64_t* b, std::size_t words);
uint64_t popcount_and3_avx2(const uint64_t* a, const uint64_t* b, const uint64_t* c,
                            std::size_t words);
#endif

struct Dispatch {
    uint64_t (*popcount)(const uint64_t*, std::size_t);
    uint64_t (*popcount_and)(const uint64_t*, const uint64_t*, std::size_t);
    uint64_t (*popcount_and3)(const uint64_t*, const uint64_t*, const uint64_t*, std::size_t);
    const char* name; // "scalar" or "avx2"
};

/// Kernel set picked once per process from CPU capabilities.
const Dispatch& active_dispatch();

inline uint64_t popcount(const uint64_t* a, std::size_t words) {
    return active_dispatch().popcount(a, words);
}
inline uint64_t popcount_and(const uint64_t* a, const uint64_t* b, std::size_t words) {
    return active_dispatch().popcount_and(a, b, words);
}
inline uint64_t popcount_and3(const uint64_t* a, const uint64_t* b, const uint64_t* c,
                              std::size_t words) {
    return active_dispatch().popcount_and3(a, b, c, words);
}

} // namespace twoswitch::kernels
