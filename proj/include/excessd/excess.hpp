#pragma once

#include <map>
#include <string>
#include <vector>

#include "excessd/holt.hpp"

namespace excessd {

/// Actual vs expected deaths for one country-year; excess may be negative.
struct ExcessRecord {
    std::string country_code;
    int year = 0;
    double actual_deaths = 0.0;
    double expected_deaths = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double excess = 0.0;
    bool outside_interval = false;
};

/// Difference between occurred and expected deaths; never clamped.
double excess_mortality(double actual, double expected);

/// Per-country fit plus the forecast intervals for the target years.
struct CountryForecast {
    std::string country_code;
    HoltFit fit;
    std::vector<ForecastInterval> intervals;  // one per target year, in order
};

/// Builds one record per country-year. `actuals` maps (code, year) to the
/// registered death count; horizon h covers the h-th target year.
std::vector<ExcessRecord> build_excess_table(
    const std::vector<CountryForecast>& forecasts,
    const std::map<std::pair<std::string, int>, double>& actuals,
    const std::vector<int>& target_years);

}  // namespace excessd
