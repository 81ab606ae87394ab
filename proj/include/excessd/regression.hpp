#pragma once

#include <string>
#include <vector>

namespace excessd {

enum class FitScale { Log10, Natural };

struct LabeledPoint {
    std::string label;
    double x = 0.0;
    double y = 0.0;
};

struct ExcludedPoint {
    std::string label;
    std::string reason;
};

struct AnovaTable {
    double ss_regression = 0.0;
    double ss_error = 0.0;
    double ss_total = 0.0;
    int df_regression = 1;
    int df_error = 0;
    double f_stat = 0.0;
    double p_value = 1.0;
};

/// Simple linear regression with its variance decomposition. On the Log10
/// scale coefficients live in log10 units and non-positive points are
/// excluded (and recorded) before fitting.
struct LogLogFit {
    double intercept = 0.0;
    double slope = 0.0;
    int n = 0;
    std::vector<ExcludedPoint> excluded;
    AnovaTable anova;
    FitScale scale = FitScale::Log10;
};

LogLogFit fit_loglog(const std::vector<LabeledPoint>& points);
LogLogFit fit_natural(const std::vector<LabeledPoint>& points);

/// Evaluates the fit: 10^(a + b log10 x) on the log scale, a + b x otherwise.
double predict(const LogLogFit& fit, double x);

enum class EmPredictionMethod { LogLog, Natural };

/// Dual prediction of covid deaths for one country-year, with the officially
/// declared value and its position relative to the prediction band.
struct DcPrediction {
    std::string country_code;
    int year = 0;
    double dc_by_cc = 0.0;
    double dc_by_em = 0.0;
    EmPredictionMethod dc_by_em_method = EmPredictionMethod::LogLog;
    double declared_dc = 0.0;
    bool within_band = false;
    bool clamped = false;  // negative natural-scale prediction clamped to zero
};

/// Regression inputs for one country in one year.
struct DcInputs {
    std::string country_code;
    double covid_cases = 0.0;
    double excess = 0.0;
    double declared_dc = 0.0;
};

/// The three per-year fits: declared deaths against cases and against excess
/// mortality in log10 space, plus the natural-scale fallback over the full
/// sample (used for countries whose excess is non-positive).
struct YearRegressions {
    int year = 0;
    LogLogFit by_cc;
    LogLogFit by_em;
    LogLogFit em_natural;
};

YearRegressions fit_year_regressions(const std::vector<DcInputs>& inputs, int year);

std::vector<DcPrediction> build_dc_predictions(const YearRegressions& regressions,
                                               const std::vector<DcInputs>& inputs);

}  // namespace excessd
