#include "eua/kernels.hpp"

#include <limits>

namespace eua::kernels {

namespace {

void ema_update_scalar(double* s, const double* raw, double alpha, std::size_t n) {
    const double keep = 1.0 - alpha;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = keep * s[i] + alpha * raw[i];
    }
}

void axpbypc_scalar(double* dst, const double* x, const double* y, double b,
                    double c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = x[i] + b * y[i] + c;
    }
}

void scale2_scalar(double* dst, const double* x, const double* y, double a,
                   double b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = a * x[i] + b * y[i];
    }
}

double reduce_max_scalar(const double* x, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] > m) m = x[i];
    }
    return m;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", ema_update_scalar, axpbypc_scalar,
                         scale2_scalar, reduce_max_scalar};
    return ops;
}

}  // namespace eua::kernels
