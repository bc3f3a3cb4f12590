#include "twoswitch/bitkernels.hpp"

#if defined(TWOSWITCH_HAS_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

// 4-bit LUT popcount (shuffle + sad) over 256-bit lanes, scalar tail.
// Compiled with -mavx2 for this translation unit only; callers reach it
// through the runtime dispatch, never directly.

namespace twoswitch::kernels {

namespace {

inline __m256i popcount_epu64(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline uint64_t hsum_epu64(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<uint64_t>(_mm_cvtsi128_si64(s)) +
           static_cast<uint64_t>(_mm_extract_epi64(s, 1));
}

} // namespace

uint64_t popcount_avx2(const uint64_t* a, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, popcount_epu64(v));
    }
    uint64_t total = hsum_epu64(acc);
    for (; i < words; ++i) total += std::popcount(a[i]);
    return total;
}

uint64_t popcount_and_avx2(const uint64_t* a, const uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, popcount_epu64(_mm256_and_si256(va, vb)));
    }
    uint64_t total = hsum_epu64(acc);
    for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

uint64_t popcount_and3_avx2(const uint64_t* a, const uint64_t* b, const uint64_t* c,
                            std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        acc = _mm256_add_epi64(
            acc, popcount_epu64(_mm256_and_si256(_mm256_and_si256(va, vb), vc)));
    }
    uint64_t total = hsum_epu64(acc);
    for (; i < words; ++i) total += std::popcount(a[i] & b[i] & c[i]);
    return total;
}

} // namespace twoswitch::kernels

#endif // TWOSWITCH_HAS_AVX2_KERNELS
