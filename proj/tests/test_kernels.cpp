#include <doctest.h>

#include <vector>

#include "eua/kernels.hpp"
#include "eua/rng.hpp"

using namespace eua;

namespace {

std::vector<double> random_vec(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.next_real(-100.0, 100.0);
    return v;
}

}  // namespace

// The dispatched variant must agree bit for bit with the scalar reference
// (the AVX2 kernels deliberately avoid FMA).
TEST_CASE("active kernels are bit-identical to the scalar reference") {
    const auto& ref = kernels::scalar_ops();
    const auto& act = kernels::active_ops();
    INFO("active kernel set: ", act.name);

    Rng rng(1234);
    for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 17u, 64u, 67u, 96u}) {
        auto s1 = random_vec(rng, n);
        auto s2 = s1;
        const auto raw = random_vec(rng, n);
        ref.ema_update(s1.data(), raw.data(), 0.37, n);
        act.ema_update(s2.data(), raw.data(), 0.37, n);
        CHECK(s1 == s2);

        const auto x = random_vec(rng, n);
        const auto y = random_vec(rng, n);
        std::vector<double> d1(n), d2(n);
        ref.axpbypc(d1.data(), x.data(), y.data(), 3.25, -1.5, n);
        act.axpbypc(d2.data(), x.data(), y.data(), 3.25, -1.5, n);
        CHECK(d1 == d2);

        ref.scale2(d1.data(), x.data(), y.data(), -0.75, 2.5, n);
        act.scale2(d2.data(), x.data(), y.data(), -0.75, 2.5, n);
        CHECK(d1 == d2);

        CHECK(ref.reduce_max(x.data(), n) == act.reduce_max(x.data(), n));
    }
}

TEST_CASE("kernel reference semantics") {
    const auto& ops = kernels::scalar_ops();
    std::vector<double> s{0.0, 4.0};
    const std::vector<double> raw{4.0, 4.0};
    ops.ema_update(s.data(), raw.data(), 0.5, 2);
    CHECK(s == std::vector<double>{2.0, 4.0});

    const std::vector<double> x{1.0, 2.0}, y{10.0, -10.0};
    std::vector<double> d(2);
    ops.axpbypc(d.data(), x.data(), y.data(), 2.0, 1.0, 2);
    CHECK(d == std::vector<double>{22.0, -17.0});

    ops.scale2(d.data(), x.data(), y.data(), 3.0, 0.5, 2);
    CHECK(d == std::vector<double>{8.0, 1.0});

    CHECK(ops.reduce_max(y.data(), 2) == 10.0);
}

TEST_CASE("force_scalar falls back to the reference kernels") {
    kernels::force_scalar(true);
    CHECK(std::string(kernels::active_ops().name) == "scalar");
    kernels::force_scalar(false);
}
