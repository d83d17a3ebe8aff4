#pragma once

#include <cstddef>

// Data-parallel inner loops of the network update and the heuristic
// generator. A scalar reference implementation always exists; on x86 an
// AVX2 variant is selected at runtime. The AVX2 kernels use separate
// mul/add (no FMA) so both variants produce bit-identical results.

namespace eua::kernels {

struct Ops {
    const char* name;
    // s = (1 - alpha) * s + alpha * raw
    void (*ema_update)(double* s, const double* raw, double alpha, std::size_t n);
    // dst = x + b * y + c
    void (*axpbypc)(double* dst, const double* x, const double* y, double b,
                    double c, std::size_t n);
    // dst = a * x + b * y
    void (*scale2)(double* dst, const double* x, const double* y, double a,
                   double b, std::size_t n);
    double (*reduce_max)(const double* x, std::size_t n);
};

const Ops& scalar_ops();

// Runtime-dispatched variant (AVX2 when the CPU supports it).
const Ops& active_ops();

// Test hook: force the scalar path for the current process.
void force_scalar(bool on);

}  // namespace eua::kernels
