#include "eua/dynamics.hpp"

#include <cmath>

#include "eua/kernels.hpp"

namespace eua {

NetworkState init_network(int n_users, int n_servers, const NetworkParams& params, Rng& rng) {
    if (n_users < 1 || n_servers < 1) {
        throw std::invalid_argument("network needs n_users >= 1 and n_servers >= 1");
    }
    params.validate();
    NetworkState state;
    state.params = params;
    const int cols = n_servers + 1;
    state.support = Matrix(n_users, cols);
    state.activation = Matrix(n_users, cols);
    for (int r = 0; r < n_users; ++r) {
        const int m = static_cast<int>(rng.next_int(0, cols - 1));
        state.activation.at(r, m) = 1.0;
    }
    state.timestep = 0;
    return state;
}

Matrix raw_support(const NetworkState& state, const Matrix& external_input) {
    if (!state.support.same_shape(external_input)) {
        throw std::invalid_argument("external input shape mismatch");
    }
    const auto& ops = kernels::active_ops();
    const NetworkParams& p = state.params;
    Matrix raw(external_input.rows, external_input.cols);
    for (int r = 0; r < raw.rows; ++r) {
        // sum_{m' != m} a_m' = rowsum - a_m, so the row update folds into
        // raw = I + (w_self - w_lat) * a + (bias + w_lat * rowsum)
        double rowsum = 0.0;
        const double* a = state.activation.row(r);
        for (int c = 0; c < raw.cols; ++c) rowsum += a[c];
        ops.axpbypc(raw.row(r), external_input.row(r), a, p.w_self - p.w_lat,
                    p.bias + p.w_lat * rowsum, static_cast<std::size_t>(raw.cols));
    }
    return raw;
}

void update_support(NetworkState& state, const Matrix& raw) {
    if (!state.support.same_shape(raw)) {
        throw std::invalid_argument("raw support shape mismatch");
    }
    kernels::active_ops().ema_update(state.support.v.data(), raw.v.data(),
                                     state.params.alpha, state.support.v.size());
}

Matrix confidences(const NetworkState& state) {
    const auto& ops = kernels::active_ops();
    Matrix pi(state.support.rows, state.support.cols);
    for (int r = 0; r < pi.rows; ++r) {
        const double* s = state.support.row(r);
        double* out = pi.row(r);
        const std::size_t n = static_cast<std::size_t>(pi.cols);
        const double m = ops.reduce_max(s, n);
        double sum = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            out[c] = std::exp(s[c] - m);
            sum += out[c];
        }
        for (std::size_t c = 0; c < n; ++c) out[c] /= sum;
    }
    return pi;
}

Matrix sample_activation(const Matrix& conf, Rng& rng) {
    Matrix act(conf.rows, conf.cols);
    for (int r = 0; r < conf.rows; ++r) {
        const int m = rng.categorical({conf.row(r), static_cast<std::size_t>(conf.cols)});
        act.at(r, m) = 1.0;
    }
    return act;
}

void step(NetworkState& state, const Matrix& external_input, Rng& rng) {
    Matrix raw = raw_support(state, external_input);
    update_support(state, raw);
    state.activation = sample_activation(confidences(state), rng);
    ++state.timestep;
}

}  // namespace eua
