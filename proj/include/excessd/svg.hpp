#pragma once

#include <string>
#include <vector>

namespace excessd {

struct BarItem {
    std::string label;
    double value = 0.0;
};

/// Static vertical bar chart; bars are drawn in the given order with the
/// value printed above each bar in three-digit scientific notation.
std::string bar_chart_svg(const std::string& title, const std::vector<BarItem>& items);

struct ForecastPoint {
    int year = 0;
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Yearly line plot of a series with forecast markers and interval whiskers.
std::string line_chart_svg(const std::string& title, int start_year,
                           const std::vector<double>& values,
                           const std::vector<ForecastPoint>& forecasts);

}  // namespace excessd
