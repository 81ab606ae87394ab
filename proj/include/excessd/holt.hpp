#pragma once

#include <Eigen/Core>
#include <utility>

#include "excessd/annual_series.hpp"
#include "excessd/simplex.hpp"

namespace excessd {

enum class EstimationMethod { ArimaInit, DirectSse };
enum class MadWindow { All, SkipFirst };

/// Smoothing constants and initial state of the level/trend recursion.
struct HoltParams {
    double alpha = 0.0;   // level smoothing constant, in [0, 1]
    double gamma = 0.0;   // trend smoothing constant, in [0, 1]
    double level0 = 0.0;  // state consumed before the first observation
    double trend0 = 0.0;
};

struct ParamEstimate {
    HoltParams params;
    bool converged = true;
    bool degenerate = false;  // twice-differenced series was identically zero
    int iters = 0;
};

/// A fitted smoother: parameters, final state, one-step fitted values,
/// residuals, and the mean absolute deviation of the residuals.
struct HoltFit {
    HoltParams params;
    double final_level = 0.0;
    double final_trend = 0.0;
    Eigen::VectorXd fitted;
    Eigen::VectorXd residuals;
    double mad = 0.0;
    EstimationMethod method = EstimationMethod::ArimaInit;
    bool converged = true;
    bool degenerate = false;
};

struct ForecastInterval {
    int horizon = 1;
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double coverage = 0.95;
    bool degenerate = false;  // zero-width (mad == 0)
};

/// One step of the level/trend update; total on valid smoothing constants.
std::pair<double, double> holt_update(double level_prev, double trend_prev, double y,
                                      double alpha, double gamma);

/// Runs the smoother over the series. fitted[t] is the one-step-ahead
/// prediction from the state before observation t (fitted[0] = level0+trend0).
HoltFit run_smoother(const AnnualSeries& series, const HoltParams& params,
                     MadWindow mad_window = MadWindow::All);

/// Point forecast at the given horizon: final_level + horizon * final_trend.
double forecast(const HoltFit& fit, int horizon);

/// Symmetric prediction limits from the MAD error scale (sigma ~ 1.25 MAD)
/// widened along the horizon by the h-step error-variance profile.
ForecastInterval prediction_interval(const HoltFit& fit, int horizon, double coverage = 0.95);

/// Exact least-squares recovery of (level0, trend0) for fixed smoothing
/// constants; fitted values are affine in the initial state.
std::pair<double, double> initial_state_least_squares(const Eigen::VectorXd& values,
                                                      double alpha, double gamma);

/// Estimates the smoothing constants through an MA(2) fit, by conditional
/// least squares, on the twice-differenced series, then maps the coefficients
/// to (alpha, gamma) and recovers the initial state by least squares.
ParamEstimate estimate_params_arima(const AnnualSeries& series);

/// Fallback backend: minimizes the in-sample one-step SSE jointly over
/// (alpha, gamma, level0, trend0) with a 3x3 multi-start grid on (alpha, gamma).
ParamEstimate estimate_params_direct(const AnnualSeries& series);

/// Convenience: estimate with the chosen backend, then run the smoother.
HoltFit fit_series(const AnnualSeries& series, EstimationMethod method,
                   MadWindow mad_window = MadWindow::All);

}  // namespace excessd
