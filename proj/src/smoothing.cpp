#include "smspk/smoothing.hpp"

#include <cmath>

#include "smspk/errors.hpp"

namespace smspk {

void SmoothingConfig::validate() const {
    if (alpha < 0.0 || alpha > 1.0) throw ConfigError("smoothing alpha must be in [0, 1]");
    if (!(tolerance > 0.0)) throw ConfigError("smoothing tolerance must be positive");
    if (max_iterations <= 0) throw ConfigError("smoothing max_iterations must be positive");
}

Eigen::MatrixXd path_normalized_adjacency(int path_len) {
    if (path_len < 2) throw ConfigError("path length must be at least 2");
    Eigen::VectorXd degree = Eigen::VectorXd::Constant(path_len, 2.0);
    degree(0) = 1.0;
    degree(path_len - 1) = 1.0;

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(path_len, path_len);
    for (int i = 0; i + 1 < path_len; ++i) {
        const double w = 1.0 / std::sqrt(degree(i) * degree(i + 1));
        a(i, i + 1) = w;
        a(i + 1, i) = w;
    }
    return a;
}

Eigen::MatrixXd chain_propagation_operator(int path_len, double alpha) {
    if (alpha < 0.0 || alpha >= 1.0) {
        throw ConfigError("direct smoothing requires alpha in [0, 1)");
    }
    if (alpha == 0.0) return Eigen::MatrixXd::Identity(path_len, path_len);
    const Eigen::MatrixXd a = path_normalized_adjacency(path_len);
    const Eigen::MatrixXd system =
        Eigen::MatrixXd::Identity(path_len, path_len) - alpha * a;
    // I - alpha*A' is symmetric positive definite for alpha < 1.
    return (1.0 - alpha) * system.llt().solve(Eigen::MatrixXd::Identity(path_len, path_len));
}

Eigen::MatrixXd smooth_iterative(const Eigen::MatrixXd& s0, const SmoothingConfig& cfg) {
    cfg.validate();
    if (cfg.alpha == 0.0) return s0;
    if (s0.cols() < 2) throw ConfigError("state matrix needs at least 2 path positions");

    const Eigen::MatrixXd a = path_normalized_adjacency(static_cast<int>(s0.cols()));
    const Eigen::MatrixXd base = (1.0 - cfg.alpha) * s0;
    Eigen::MatrixXd state = s0;
    double residual = 0.0;
    for (int iter = 0; iter < cfg.max_iterations; ++iter) {
        Eigen::MatrixXd next = cfg.alpha * (state * a) + base;
        residual = (next - state).cwiseAbs().maxCoeff();
        state.swap(next);
        if (residual < cfg.tolerance) return state;
    }
    throw ConvergenceError("smoothing did not converge within " +
                               std::to_string(cfg.max_iterations) + " iterations",
                           residual);
}

Eigen::MatrixXd smooth_direct(const Eigen::MatrixXd& s0, double alpha) {
    if (alpha == 1.0) throw ConfigError("smooth_direct: fixed point undefined at alpha = 1");
    if (alpha == 0.0) return s0;
    if (s0.cols() < 2) throw ConfigError("state matrix needs at least 2 path positions");
    return s0 * chain_propagation_operator(static_cast<int>(s0.cols()), alpha);
}

}  // namespace smspk
