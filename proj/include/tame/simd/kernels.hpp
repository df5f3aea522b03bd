#pragma once

// Row kernels for arithmetic modulo the Mersenne prime 2^31 - 1.
//
// Every representation-theoretic computation in the library reduces to
// Gaussian elimination over this field; the two kernels below are the inner
// loops of that elimination. A scalar reference implementation is always
// available; vectorized variants are selected at runtime when the CPU
// supports them and must agree with the scalar path bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace tame::simd {

inline constexpr std::uint32_t kModulus = 2147483647u;  // 2^31 - 1

/// dst[i] = (dst[i] + c * src[i]) mod p, all operands canonical in [0, p).
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
                        std::size_t n);
/// row[i] = (row[i] * c) mod p.
using ScaleFn = void (*)(std::uint32_t* row, std::uint32_t c, std::size_t n);

struct KernelTable {
    std::string_view name;
    AxpyFn axpy;
    ScaleFn scale;
};

const KernelTable& scalar_kernels();

/// Vectorized tables compiled into this binary and usable on this CPU.
std::vector<const KernelTable*> available_kernels();

/// Kernel table used by the linear algebra layer. Defaults to the widest
/// supported variant; the TAME_SIMD environment variable ("scalar", "avx2",
/// "neon") overrides the choice at first use.
const KernelTable& active();

/// Switches the active table by name. Returns false if unavailable.
bool select(std::string_view name);

namespace detail {
const KernelTable* avx2_table();
const KernelTable* neon_table();
}  // namespace detail

inline std::uint32_t reduce(std::uint64_t x) {
    x = (x & kModulus) + (x >> 31);
    x = (x & kModulus) + (x >> 31);
    return static_cast<std::uint32_t>(x >= kModulus ? x - kModulus : x);
}

}  // namespace tame::simd
