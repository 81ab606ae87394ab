#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>
#include <vector>

namespace excessd {

/// Per-dimension box constraint; infinities mean unbounded.
struct Bounds {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
};

struct SimplexConfig {
    int max_iters = 500;
    double rel_tol = 1e-8;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    std::vector<Bounds> bounds;  // empty: unconstrained
};

struct SimplexResult {
    Eigen::VectorXd argmin;
    double fmin = 0.0;
    bool converged = false;
    int iters = 0;
};

/**
 * Derivative-free Nelder-Mead minimization with bounds handled by clipping.
 *
 * Deterministic: identical (objective, x0, config) give bit-identical results.
 * The initial simplex is x0 plus per-axis steps of 5% of the bound range
 * (0.05 absolute on unbounded axes). Stops when the simplex diameter falls
 * below rel_tol relative to the best vertex, or after max_iters iterations;
 * the best vertex seen is returned either way.
 */
SimplexResult minimize(const std::function<double(const Eigen::VectorXd&)>& objective,
                       const Eigen::VectorXd& x0, const SimplexConfig& config = {});

}  // namespace excessd
