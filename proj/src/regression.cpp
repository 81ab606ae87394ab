#include "excessd/regression.hpp"

#include <algorithm>
#include <cmath>

#include "excessd/errors.hpp"
#include "excessd/stats.hpp"

namespace excessd {

namespace {

LogLogFit fit_points(const std::vector<LabeledPoint>& points, FitScale scale) {
    LogLogFit fit;
    fit.scale = scale;

    std::vector<double> xs;
    std::vector<double> ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const LabeledPoint& p : points) {
        if (scale == FitScale::Log10 && (p.x <= 0.0 || p.y <= 0.0)) {
            fit.excluded.push_back({p.label, p.x <= 0.0 ? "non-positive x" : "non-positive y"});
            continue;
        }
        xs.push_back(scale == FitScale::Log10 ? std::log10(p.x) : p.x);
        ys.push_back(scale == FitScale::Log10 ? std::log10(p.y) : p.y);
    }

    const int n = static_cast<int>(xs.size());
    if (n < 3) throw ValidationError("regression: fewer than 3 usable points");
    fit.n = n;

    double xbar = 0.0;
    double ybar = 0.0;
    for (int i = 0; i < n; ++i) {
        xbar += xs[i];
        ybar += ys[i];
    }
    xbar /= n;
    ybar /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx <= 1e-12 * n * (1.0 + xbar * xbar))
        throw ValidationError("regression: zero variance in x");

    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;

    double ss_err = 0.0;
    double ss_tot = 0.0;
    double ss_reg = 0.0;
    for (int i = 0; i < n; ++i) {
        const double fitted = fit.intercept + fit.slope * xs[i];
        ss_err += (ys[i] - fitted) * (ys[i] - fitted);
        ss_tot += (ys[i] - ybar) * (ys[i] - ybar);
        ss_reg += (fitted - ybar) * (fitted - ybar);
    }
    fit.anova.ss_regression = ss_reg;
    fit.anova.ss_error = ss_err;
    fit.anova.ss_total = ss_tot;
    fit.anova.df_regression = 1;
    fit.anova.df_error = n - 2;
    fit.anova.f_stat = ss_reg / (ss_err / (n - 2));
    fit.anova.p_value = stats::f_tail_probability(fit.anova.f_stat, 1, n - 2);
    return fit;
}

}  // namespace

LogLogFit fit_loglog(const std::vector<LabeledPoint>& points) {
    return fit_points(points, FitScale::Log10);
}

LogLogFit fit_natural(const std::vector<LabeledPoint>& points) {
    return fit_points(points, FitScale::Natural);
}

double predict(const LogLogFit& fit, double x) {
    if (fit.scale == FitScale::Log10) {
        if (x <= 0.0) throw std::invalid_argument("predict: x must be > 0 on the log10 scale");
        return std::pow(10.0, fit.intercept + fit.slope * std::log10(x));
    }
    return fit.intercept + fit.slope * x;
}

YearRegressions fit_year_regressions(const std::vector<DcInputs>& inputs, int year) {
    std::vector<LabeledPoint> cc_points;
    std::vector<LabeledPoint> em_points;
    cc_points.reserve(inputs.size());
    em_points.reserve(inputs.size());
    for (const DcInputs& in : inputs) {
        cc_points.push_back({in.country_code, in.covid_cases, in.declared_dc});
        em_points.push_back({in.country_code, in.excess, in.declared_dc});
    }
    YearRegressions out;
    out.year = year;
    out.by_cc = fit_loglog(cc_points);
    out.by_em = fit_loglog(em_points);
    // Fallback fit keeps the full sample, including non-positive excess rows.
    out.em_natural = fit_natural(em_points);
    return out;
}

std::vector<DcPrediction> build_dc_predictions(const YearRegressions& regressions,
                                               const std::vector<DcInputs>& inputs) {
    std::vector<DcPrediction> out;
    out.reserve(inputs.size());
    for (const DcInputs& in : inputs) {
        DcPrediction p;
        p.country_code = in.country_code;
        p.year = regressions.year;
        p.declared_dc = in.declared_dc;
        p.dc_by_cc = predict(regressions.by_cc, in.covid_cases);
        if (in.excess > 0.0) {
            p.dc_by_em = predict(regressions.by_em, in.excess);
            p.dc_by_em_method = EmPredictionMethod::LogLog;
        } else {
            double value = predict(regressions.em_natural, in.excess);
            if (value < 0.0) {
                value = 0.0;
                p.clamped = true;
            }
            p.dc_by_em = value;
            p.dc_by_em_method = EmPredictionMethod::Natural;
        }
        const double lo = std::min(p.dc_by_cc, p.dc_by_em);
        const double hi = std::max(p.dc_by_cc, p.dc_by_em);
        p.within_band = lo <= p.declared_dc && p.declared_dc <= hi;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace excessd
