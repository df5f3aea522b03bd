#include <immintrin.h>

#include "tame/simd/kernels.hpp"

namespace tame::simd {
namespace {

// Lanes hold values below 2^63; two folding steps bring them below p + 2,
// one conditional subtraction makes them canonical.
inline __m256i reduce64(__m256i x, __m256i p, __m256i p_minus_1) {
    x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
    x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
    const __m256i ge = _mm256_cmpgt_epi64(x, p_minus_1);
    return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
    if (c == 0) return;
    const __m256i p = _mm256_set1_epi64x(kModulus);
    const __m256i pm1 = _mm256_set1_epi64x(kModulus - 1);
    const __m256i lo = _mm256_set1_epi64x(0xffffffffLL);
    const __m256i cc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i even = _mm256_mul_epu32(s, cc);
        __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), cc);
        even = _mm256_add_epi64(even, _mm256_and_si256(d, lo));
        odd = _mm256_add_epi64(odd, _mm256_srli_epi64(d, 32));
        even = reduce64(even, p, pm1);
        odd = reduce64(odd, p, pm1);
        const __m256i r = _mm256_or_si256(even, _mm256_slli_epi64(odd, 32));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < n; ++i) dst[i] = reduce(static_cast<std::uint64_t>(src[i]) * c + dst[i]);
}

void scale_avx2(std::uint32_t* row, std::uint32_t c, std::size_t n) {
    const __m256i p = _mm256_set1_epi64x(kModulus);
    const __m256i pm1 = _mm256_set1_epi64x(kModulus - 1);
    const __m256i cc = _mm256_set1_epi64x(c);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        __m256i even = _mm256_mul_epu32(s, cc);
        __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), cc);
        even = reduce64(even, p, pm1);
        odd = reduce64(odd, p, pm1);
        const __m256i r = _mm256_or_si256(even, _mm256_slli_epi64(odd, 32));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), r);
    }
    for (; i < n; ++i) row[i] = reduce(static_cast<std::uint64_t>(row[i]) * c);
}

constexpr KernelTable kAvx2{"avx2", axpy_avx2, scale_avx2};

}  // namespace

namespace detail {
const KernelTable* avx2_table() {
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
    return nullptr;
}
}  // namespace detail

}  // namespace tame::simd
