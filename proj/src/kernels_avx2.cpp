// AVX2 variants of the inner-loop kernels. Compiled with -mavx2 and only
// dispatched to when the CPU reports AVX2 support. Tails are handled with
// the same scalar expressions as the reference kernels, and no FMA is
// used, so results match the scalar path bit for bit.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <limits>

#include "eua/kernels.hpp"

namespace eua::kernels {

namespace {

void ema_update_avx2(double* s, const double* raw, double alpha, std::size_t n) {
    const double keep = 1.0 - alpha;
    const __m256d vkeep = _mm256_set1_pd(keep);
    const __m256d valpha = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vs = _mm256_loadu_pd(s + i);
        __m256d vr = _mm256_loadu_pd(raw + i);
        vs = _mm256_add_pd(_mm256_mul_pd(vkeep, vs), _mm256_mul_pd(valpha, vr));
        _mm256_storeu_pd(s + i, vs);
    }
    for (; i < n; ++i) {
        s[i] = keep * s[i] + alpha * raw[i];
    }
}

void axpbypc_avx2(double* dst, const double* x, const double* y, double b,
                  double c, std::size_t n) {
    const __m256d vb = _mm256_set1_pd(b);
    const __m256d vc = _mm256_set1_pd(c);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d v = _mm256_add_pd(_mm256_add_pd(vx, _mm256_mul_pd(vb, vy)), vc);
        _mm256_storeu_pd(dst + i, v);
    }
    for (; i < n; ++i) {
        dst[i] = x[i] + b * y[i] + c;
    }
}

void scale2_avx2(double* dst, const double* x, const double* y, double a,
                 double b, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vx = _mm256_loadu_pd(x + i);
        __m256d vy = _mm256_loadu_pd(y + i);
        __m256d v = _mm256_add_pd(_mm256_mul_pd(va, vx), _mm256_mul_pd(vb, vy));
        _mm256_storeu_pd(dst + i, v);
    }
    for (; i < n; ++i) {
        dst[i] = a * x[i] + b * y[i];
    }
}

double reduce_max_avx2(const double* x, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vm = _mm256_loadu_pd(x);
        for (i = 4; i + 4 <= n; i += 4) {
            vm = _mm256_max_pd(vm, _mm256_loadu_pd(x + i));
        }
        alignas(32) double lanes[4];
        _mm256_store_pd(lanes, vm);
        for (double v : lanes) {
            if (v > m) m = v;
        }
    }
    for (; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }
    return m;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{"avx2", ema_update_avx2, axpbypc_avx2, scale2_avx2,
                         reduce_max_avx2};
    return ops;
}

}  // namespace eua::kernels

#endif
