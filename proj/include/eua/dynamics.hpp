#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "eua/rng.hpp"

namespace eua {

// Dense row-major matrix; rows are hypercolumns (one per user), columns are
// allocation units for each server plus the trailing no-allocation unit.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

    double& at(int r, int c) { return v[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<std::size_t>(r) * cols + c]; }
    double* row(int r) { return v.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return v.data() + static_cast<std::size_t>(r) * cols; }
    bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }
    bool operator==(const Matrix&) const = default;
};

struct NetworkParams {
    double alpha = 0.5;   // EMA factor in (0, 1]
    double w_self = 1.0;  // positive self-connection weight
    double w_lat = -2.0;  // negative lateral weight within a hypercolumn
    double bias = 0.0;    // fixed b term

    void validate() const {
        if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must be in (0,1]");
        if (!(w_self > 0.0)) throw std::invalid_argument("w_self must be positive");
        if (!(w_lat < 0.0)) throw std::invalid_argument("w_lat must be negative");
    }
};

// One WTA hypercolumn per user, n_s + 1 units each. Connectivity is
// strictly within-hypercolumn; all guidance flows through the external
// input. Confined to one worker at a time.
struct NetworkState {
    Matrix support;     // n_u x (n_s + 1)
    Matrix activation;  // one-hot per row
    NetworkParams params;
    std::int64_t timestep = 0;
};

NetworkState init_network(int n_users, int n_servers, const NetworkParams& params, Rng& rng);

// s'_um = bias + I_um + w_self * a_um + w_lat * sum_{m' != m} a_um'
Matrix raw_support(const NetworkState& state, const Matrix& external_input);

// s <- (1 - alpha) * s + alpha * s'
void update_support(NetworkState& state, const Matrix& raw);

// Row-wise softmax of the support, max-subtracted for overflow safety.
Matrix confidences(const NetworkState& state);

// Independent categorical draw per row.
Matrix sample_activation(const Matrix& confidences, Rng& rng);

// One full update: raw support -> EMA -> softmax -> stochastic WTA.
void step(NetworkState& state, const Matrix& external_input, Rng& rng);

}  // namespace eua
