#include "excessd/excess.hpp"

#include "excessd/errors.hpp"

namespace excessd {

double excess_mortality(double actual, double expected) {
    return actual - expected;
}

std::vector<ExcessRecord> build_excess_table(
    const std::vector<CountryForecast>& forecasts,
    const std::map<std::pair<std::string, int>, double>& actuals,
    const std::vector<int>& target_years) {
    std::vector<ExcessRecord> table;
    table.reserve(forecasts.size() * target_years.size());
    for (const CountryForecast& cf : forecasts) {
        for (std::size_t h = 0; h < target_years.size(); ++h) {
            const int year = target_years[h];
            const auto it = actuals.find({cf.country_code, year});
            if (it == actuals.end()) {
                throw ValidationError("excess: missing actual deaths for " + cf.country_code +
                                      "/" + std::to_string(year));
            }
            const ForecastInterval& interval = cf.intervals.at(h);
            ExcessRecord rec;
            rec.country_code = cf.country_code;
            rec.year = year;
            rec.actual_deaths = it->second;
            rec.expected_deaths = interval.point;
            rec.lower = interval.lower;
            rec.upper = interval.upper;
            rec.excess = excess_mortality(rec.actual_deaths, rec.expected_deaths);
            rec.outside_interval = rec.actual_deaths < rec.lower || rec.actual_deaths > rec.upper;
            table.push_back(std::move(rec));
        }
    }
    return table;
}

}  // namespace excessd
