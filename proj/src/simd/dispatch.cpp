#include <atomic>
#include <cstdlib>
#include <string>

#include "tame/simd/kernels.hpp"

namespace tame::simd {

namespace detail {
#if !defined(TAME_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !defined(TAME_HAVE_NEON)
const KernelTable* neon_table() { return nullptr; }
#endif
}  // namespace detail

namespace {

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* find(std::string_view name) {
    if (name == "scalar") return &scalar_kernels();
    for (const KernelTable* t : available_kernels()) {
        if (t->name == name) return t;
    }
    return nullptr;
}

const KernelTable* choose_default() {
    if (const char* env = std::getenv("TAME_SIMD")) {
        if (const KernelTable* t = find(env)) return t;
    }
    auto vec = available_kernels();
    return vec.empty() ? &scalar_kernels() : vec.front();
}

}  // namespace

std::vector<const KernelTable*> available_kernels() {
    std::vector<const KernelTable*> out;
    if (const KernelTable* t = detail::avx2_table()) out.push_back(t);
    if (const KernelTable* t = detail::neon_table()) out.push_back(t);
    return out;
}

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (t == nullptr) {
        t = choose_default();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

bool select(std::string_view name) {
    const KernelTable* t = find(name);
    if (t == nullptr) return false;
    g_active.store(t, std::memory_order_release);
    return true;
}

}  // namespace tame::simd
