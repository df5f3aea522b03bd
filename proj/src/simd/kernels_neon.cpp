#include <arm_neon.h>

#include "tame/simd/kernels.hpp"

namespace tame::simd {
namespace {

inline uint64x2_t reduce64(uint64x2_t x) {
    const uint64x2_t p = vdupq_n_u64(kModulus);
    x = vaddq_u64(vandq_u64(x, p), vshrq_n_u64(x, 31));
    x = vaddq_u64(vandq_u64(x, p), vshrq_n_u64(x, 31));
    const uint64x2_t ge = vcgeq_u64(x, p);
    return vsubq_u64(x, vandq_u64(ge, p));
}

void axpy_neon(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
    if (c == 0) return;
    const uint32x2_t cc = vdup_n_u32(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const uint32x4_t s = vld1q_u32(src + i);
        const uint32x4_t d = vld1q_u32(dst + i);
        uint64x2_t lo = vmlal_u32(vmovl_u32(vget_low_u32(d)), vget_low_u32(s), cc);
        uint64x2_t hi = vmlal_u32(vmovl_u32(vget_high_u32(d)), vget_high_u32(s), cc);
        lo = reduce64(lo);
        hi = reduce64(hi);
        vst1q_u32(dst + i, vcombine_u32(vmovn_u64(lo), vmovn_u64(hi)));
    }
    for (; i < n; ++i) dst[i] = reduce(static_cast<std::uint64_t>(src[i]) * c + dst[i]);
}

void scale_neon(std::uint32_t* row, std::uint32_t c, std::size_t n) {
    const uint32x2_t cc = vdup_n_u32(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const uint32x4_t s = vld1q_u32(row + i);
        uint64x2_t lo = reduce64(vmull_u32(vget_low_u32(s), cc));
        uint64x2_t hi = reduce64(vmull_u32(vget_high_u32(s), cc));
        vst1q_u32(row + i, vcombine_u32(vmovn_u64(lo), vmovn_u64(hi)));
    }
    for (; i < n; ++i) row[i] = reduce(static_cast<std::uint64_t>(row[i]) * c);
}

constexpr KernelTable kNeon{"neon", axpy_neon, scale_neon};

}  // namespace

namespace detail {
const KernelTable* neon_table() { return &kNeon; }
}  // namespace detail

}  // namespace tame::simd
