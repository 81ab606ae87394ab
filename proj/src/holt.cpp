#include "excessd/holt.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "excessd/stats.hpp"

namespace excessd {

namespace {

// Smoother recursion over a raw vector; returns fitted values and final state.
struct SmootherRun {
    Eigen::VectorXd fitted;
    double final_level;
    double final_trend;
};

SmootherRun smooth(const Eigen::VectorXd& y, double alpha, double gamma, double l0, double t0) {
    SmootherRun run;
    run.fitted.resize(y.size());
    double level = l0;
    double trend = t0;
    for (Eigen::Index t = 0; t < y.size(); ++t) {
        const double one_step = level + trend;
        run.fitted[t] = one_step;
        const double new_level = alpha * y[t] + (1.0 - alpha) * one_step;
        trend = gamma * (new_level - level) + (1.0 - gamma) * trend;
        level = new_level;
    }
    run.final_level = level;
    run.final_trend = trend;
    return run;
}

double mad_of(const Eigen::VectorXd& residuals, MadWindow window) {
    const Eigen::Index start = window == MadWindow::SkipFirst ? 1 : 0;
    const Eigen::Index count = residuals.size() - start;
    return residuals.tail(count).cwiseAbs().sum() / static_cast<double>(count);
}

// Conditional sum of squared innovations of an MA(2) with polynomial
// (1 - th1 B - th2 B^2), pre-sample innovations set to zero.
double css_ma2(const Eigen::VectorXd& w, double th1, double th2) {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double s = 0.0;
    for (Eigen::Index t = 0; t < w.size(); ++t) {
        const double e = w[t] + th1 * eps1 + th2 * eps2;
        s += e * e;
        eps2 = eps1;
        eps1 = e;
    }
    return s;
}

}  // namespace

std::pair<double, double> holt_update(double level_prev, double trend_prev, double y,
                                      double alpha, double gamma) {
    if (!(alpha >= 0.0 && alpha <= 1.0 && gamma >= 0.0 && gamma <= 1.0))
        throw std::invalid_argument("holt_update: smoothing constants must lie in [0, 1]");
    const double level = alpha * y + (1.0 - alpha) * (level_prev + trend_prev);
    const double trend = gamma * (level - level_prev) + (1.0 - gamma) * trend_prev;
    return {level, trend};
}

HoltFit run_smoother(const AnnualSeries& series, const HoltParams& params, MadWindow mad_window) {
    if (!(params.alpha >= 0.0 && params.alpha <= 1.0 && params.gamma >= 0.0 && params.gamma <= 1.0))
        throw std::invalid_argument("run_smoother: smoothing constants must lie in [0, 1]");
    const Eigen::VectorXd& y = series.values();
    SmootherRun run = smooth(y, params.alpha, params.gamma, params.level0, params.trend0);
    HoltFit fit;
    fit.params = params;
    fit.final_level = run.final_level;
    fit.final_trend = run.final_trend;
    fit.fitted = std::move(run.fitted);
    fit.residuals = y - fit.fitted;
    fit.mad = mad_of(fit.residuals, mad_window);
    return fit;
}

double forecast(const HoltFit& fit, int horizon) {
    if (horizon < 1) throw std::invalid_argument("forecast: horizon must be >= 1");
    return fit.final_level + static_cast<double>(horizon) * fit.final_trend;
}

ForecastInterval prediction_interval(const HoltFit& fit, int horizon, double coverage) {
    if (horizon < 1) throw std::invalid_argument("prediction_interval: horizon must be >= 1");
    if (!(coverage > 0.0 && coverage < 1.0))
        throw std::invalid_argument("prediction_interval: coverage must lie in (0, 1)");
    const double z = stats::normal_quantile(0.5 * (1.0 + coverage));
    double c = 1.0;
    for (int j = 1; j < horizon; ++j) {
        const double psi = fit.params.alpha * (1.0 + j * fit.params.gamma);
        c += psi * psi;
    }
    const double half_width = z * 1.25 * fit.mad * std::sqrt(c);
    ForecastInterval interval;
    interval.horizon = horizon;
    interval.point = forecast(fit, horizon);
    interval.lower = interval.point - half_width;
    interval.upper = interval.point + half_width;
    interval.coverage = coverage;
    interval.degenerate = fit.mad == 0.0;
    return interval;
}

std::pair<double, double> initial_state_least_squares(const Eigen::VectorXd& values,
                                                      double alpha, double gamma) {
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(values.size());
    const Eigen::VectorXd base = smooth(values, alpha, gamma, 0.0, 0.0).fitted;
    const Eigen::VectorXd col_l0 = smooth(zero, alpha, gamma, 1.0, 0.0).fitted;
    const Eigen::VectorXd col_t0 = smooth(zero, alpha, gamma, 0.0, 1.0).fitted;
    Eigen::MatrixXd design(values.size(), 2);
    design.col(0) = col_l0;
    design.col(1) = col_t0;
    const Eigen::Vector2d sol = design.colPivHouseholderQr().solve(values - base);
    return {sol[0], sol[1]};
}

ParamEstimate estimate_params_arima(const AnnualSeries& series) {
    const Eigen::VectorXd& y = series.values();
    const Eigen::Index n = y.size();
    Eigen::VectorXd w(n - 2);
    for (Eigen::Index t = 0; t + 2 < n; ++t) w[t] = y[t + 2] - 2.0 * y[t + 1] + y[t];

    ParamEstimate out;
    const double scale = y.cwiseAbs().maxCoeff();
    if (w.cwiseAbs().maxCoeff() <= 1e-12 * std::max(scale, 1.0)) {
        // Exactly linear data: the smoother must continue the line.
        out.degenerate = true;
        out.params.alpha = 0.0;
        out.params.gamma = 0.0;
        std::tie(out.params.level0, out.params.trend0) =
            initial_state_least_squares(y, 0.0, 0.0);
        return out;
    }

    const double base = w.squaredNorm() + 1.0;
    auto objective = [&w, base](const Eigen::VectorXd& th) {
        const double th1 = th[0];
        const double th2 = th[1];
        // invertibility triangle of the MA(2) polynomial
        const double violation = std::max(0.0, th1 + th2 - 1.0) +
                                 std::max(0.0, th2 - th1 - 1.0) +
                                 std::max(0.0, std::fabs(th2) - 1.0);
        if (violation > 0.0) return base * (1e6 + violation);
        return css_ma2(w, th1, th2);
    };

    SimplexConfig config;
    config.bounds = {{-2.0, 2.0}, {-1.0, 1.0}};
    const SimplexResult res = minimize(objective, Eigen::Vector2d::Zero(), config);

    const double th1 = res.argmin[0];
    const double th2 = res.argmin[1];
    double alpha = std::clamp(1.0 + th2, 0.0, 1.0);
    double gamma = alpha <= 0.0 ? 0.0 : std::clamp((2.0 - alpha - th1) / alpha, 0.0, 1.0);
    out.params.alpha = alpha;
    out.params.gamma = gamma;
    std::tie(out.params.level0, out.params.trend0) = initial_state_least_squares(y, alpha, gamma);
    out.converged = res.converged;
    out.iters = res.iters;
    return out;
}

ParamEstimate estimate_params_direct(const AnnualSeries& series) {
    const Eigen::VectorXd& y = series.values();
    auto sse = [&y](const Eigen::VectorXd& p) {
        const Eigen::VectorXd fitted = smooth(y, p[0], p[1], p[2], p[3]).fitted;
        return (y - fitted).squaredNorm();
    };

    constexpr double kInf = std::numeric_limits<double>::infinity();
    SimplexConfig config;
    config.bounds = {{0.0, 1.0}, {0.0, 1.0}, {-kInf, kInf}, {-kInf, kInf}};

    const double starts[3] = {0.2, 0.5, 0.8};
    bool have_best = false;
    double best_value = 0.0;
    Eigen::Vector4d best_point = Eigen::Vector4d::Zero();
    bool best_converged = true;
    int best_iters = 0;
    for (double a0 : starts) {
        for (double g0 : starts) {
            auto [l0, t0] = initial_state_least_squares(y, a0, g0);
            Eigen::Vector4d x0(a0, g0, l0, t0);
            const SimplexResult res = minimize(sse, x0, config);
            // analytic polish of the initial state at the returned constants
            auto [pl0, pt0] = initial_state_least_squares(y, res.argmin[0], res.argmin[1]);
            Eigen::Vector4d polished(res.argmin[0], res.argmin[1], pl0, pt0);
            const double pf = sse(polished);
            const double cand_value = pf < res.fmin ? pf : res.fmin;
            const Eigen::Vector4d cand_point = pf < res.fmin ? polished : Eigen::Vector4d(res.argmin);
            if (!have_best || cand_value < best_value) {
                have_best = true;
                best_value = cand_value;
                best_point = cand_point;
                best_converged = res.converged;
                best_iters = res.iters;
            }
        }
    }

    ParamEstimate out;
    out.params.alpha = best_point[0];
    out.params.gamma = best_point[1];
    out.params.level0 = best_point[2];
    out.params.trend0 = best_point[3];
    out.converged = best_converged;
    out.iters = best_iters;
    return out;
}

HoltFit fit_series(const AnnualSeries& series, EstimationMethod method, MadWindow mad_window) {
    const ParamEstimate estimate = method == EstimationMethod::ArimaInit
                                       ? estimate_params_arima(series)
                                       : estimate_params_direct(series);
    HoltFit fit = run_smoother(series, estimate.params, mad_window);
    fit.method = method;
    fit.converged = estimate.converged;
    fit.degenerate = estimate.degenerate;
    return fit;
}

}  // namespace excessd
