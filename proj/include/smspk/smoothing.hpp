#pragma once

#include <Eigen/Dense>

namespace smspk {

struct SmoothingConfig {
    double alpha = 0.5;       // 0 = no smoothing; must stay in [0, 1]
    double tolerance = 1e-6;  // max-abs change between successive iterates
    int max_iterations = 1000;

    void validate() const;
};

// Symmetrically degree-normalized adjacency of the chain graph on path_len
// vertices: A'[i][j] = A[i][j] / sqrt(d_i * d_j).
Eigen::MatrixXd path_normalized_adjacency(int path_len);

// B such that smoothing a state matrix S0 over a chain is S0 * B, i.e.
// B = (1 - alpha) * (I - alpha * A')^{-1}. Requires alpha in [0, 1).
Eigen::MatrixXd chain_propagation_operator(int path_len, double alpha);

// Fixed-point iteration of S_{t+1} = alpha * S_t * A' + (1 - alpha) * S0 until
// the max-abs change drops below cfg.tolerance. Columns of s0 are positions on
// the chain. Throws ConvergenceError when the iteration cap is hit first.
Eigen::MatrixXd smooth_iterative(const Eigen::MatrixXd& s0, const SmoothingConfig& cfg);

// Direct solve of the fixed point S (I - alpha * A') = (1 - alpha) * S0.
// Rejects alpha = 1, where the fixed point is ill-defined.
Eigen::MatrixXd smooth_direct(const Eigen::MatrixXd& s0, double alpha);

}  // namespace smspk
