#include <doctest.h>

#include <cmath>

#include "excessd/simplex.hpp"

using excessd::Bounds;
using excessd::SimplexConfig;
using excessd::SimplexResult;
using excessd::minimize;

namespace {

double rosenbrock(const Eigen::VectorXd& x) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    return a * a + 100.0 * b * b;
}

}  // namespace

TEST_CASE("quadratic minimum in one dimension") {
    auto f = [](const Eigen::VectorXd& x) { return (x[0] - 3.0) * (x[0] - 3.0); };
    Eigen::VectorXd x0(1);
    x0 << 0.0;
    const SimplexResult res = minimize(f, x0);
    CHECK(res.converged);
    CHECK(std::fabs(res.argmin[0] - 3.0) < 1e-6);
    CHECK(res.fmin <= f(x0));
}

TEST_CASE("sphere minimum in two dimensions") {
    auto f = [](const Eigen::VectorXd& x) { return x.squaredNorm(); };
    const SimplexResult res = minimize(f, Eigen::Vector2d(1.0, 1.0));
    CHECK(res.argmin.lpNorm<Eigen::Infinity>() < 1e-6);
}

TEST_CASE("rosenbrock reaches the global minimum") {
    const SimplexResult res = minimize(rosenbrock, Eigen::Vector2d(-1.2, 1.0));
    CHECK(std::fabs(res.argmin[0] - 1.0) < 1e-4);
    CHECK(std::fabs(res.argmin[1] - 1.0) < 1e-4);
}

TEST_CASE("best value is monotone in the iteration budget") {
    double prev = std::numeric_limits<double>::infinity();
    for (int iters = 1; iters <= 40; ++iters) {
        SimplexConfig config;
        config.max_iters = iters;
        const SimplexResult res = minimize(rosenbrock, Eigen::Vector2d(-1.2, 1.0), config);
        CHECK(res.fmin <= prev);
        prev = res.fmin;
    }
}

TEST_CASE("bounds are enforced on every evaluated point") {
    SimplexConfig config;
    config.bounds = {Bounds{-0.5, 0.5}, Bounds{-0.5, 0.5}};
    auto f = [](const Eigen::VectorXd& x) {
        CHECK(x[0] >= -0.5);
        CHECK(x[0] <= 0.5);
        CHECK(x[1] >= -0.5);
        CHECK(x[1] <= 0.5);
        // minimum outside the box at (2, 0)
        return (x[0] - 2.0) * (x[0] - 2.0) + x[1] * x[1];
    };
    const SimplexResult res = minimize(f, Eigen::Vector2d(0.0, 0.3), config);
    CHECK(res.argmin[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("identical inputs give bit-identical results") {
    const SimplexResult a = minimize(rosenbrock, Eigen::Vector2d(-1.2, 1.0));
    const SimplexResult b = minimize(rosenbrock, Eigen::Vector2d(-1.2, 1.0));
    CHECK(a.fmin == b.fmin);
    CHECK(a.iters == b.iters);
    CHECK(a.argmin[0] == b.argmin[0]);
    CHECK(a.argmin[1] == b.argmin[1]);
}

TEST_CASE("invalid inputs are rejected") {
    auto f = [](const Eigen::VectorXd& x) { return x[0]; };
    CHECK_THROWS_AS(minimize(f, Eigen::VectorXd()), std::invalid_argument);

    auto bad = [](const Eigen::VectorXd&) { return std::numeric_limits<double>::quiet_NaN(); };
    Eigen::VectorXd x0(1);
    x0 << 0.0;
    CHECK_THROWS_AS(minimize(bad, x0), std::invalid_argument);

    SimplexConfig config;
    config.max_iters = 0;
    CHECK_THROWS_AS(minimize(f, x0, config), std::invalid_argument);
}
