#include "eua/kernels.hpp"

#include <atomic>

namespace eua::kernels {

#if defined(__x86_64__) || defined(__i386__)
const Ops& avx2_ops();  // defined in kernels_avx2.cpp
#endif

namespace {

std::atomic<bool> g_force_scalar{false};

const Ops& detect() {
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2")) {
        return avx2_ops();
    }
#endif
    return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
    if (g_force_scalar.load(std::memory_order_relaxed)) {
        return scalar_ops();
    }
    static const Ops& detected = detect();
    return detected;
}

void force_scalar(bool on) {
    g_force_scalar.store(on, std::memory_order_relaxed);
}

}  // namespace eua::kernels
