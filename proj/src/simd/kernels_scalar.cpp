#include "tame/simd/kernels.hpp"

namespace tame::simd {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t n) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = reduce(static_cast<std::uint64_t>(src[i]) * c + dst[i]);
    }
}

void scale_scalar(std::uint32_t* row, std::uint32_t c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        row[i] = reduce(static_cast<std::uint64_t>(row[i]) * c);
    }
}

constexpr KernelTable kScalar{"scalar", axpy_scalar, scale_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace tame::simd
