#include <doctest.h>

#include <random>

#include "excessd/excess.hpp"
#include "excessd/errors.hpp"

using namespace excessd;

TEST_CASE("excess mortality anchors") {
    CHECK(excess_mortality(91599, 85153) == 6446);
    CHECK(excess_mortality(54645, 55835) == -1190);  // negative excess survives
    CHECK(excess_mortality(746146, 648310) == 97836);
    CHECK(excess_mortality(1234, 1234) == 0);
}

TEST_CASE("antisymmetry") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    for (int i = 0; i < 200; ++i) {
        const double a = dist(rng);
        const double e = dist(rng);
        CHECK(excess_mortality(a, e) == doctest::Approx(-excess_mortality(e, a)).epsilon(1e-14));
    }
}

TEST_CASE("additivity over countries") {
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> dist(1000.0, 9000.0);
    double sum_actual = 0.0;
    double sum_expected = 0.0;
    double sum_excess = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double a = dist(rng);
        const double e = dist(rng);
        sum_actual += a;
        sum_expected += e;
        sum_excess += excess_mortality(a, e);
    }
    CHECK(sum_excess == doctest::Approx(excess_mortality(sum_actual, sum_expected)).epsilon(1e-12));
}

namespace {

CountryForecast make_forecast(const std::string& code, double point1, double hw1, double point2,
                              double hw2) {
    CountryForecast cf;
    cf.country_code = code;
    cf.fit.final_level = 2 * point1 - point2;
    cf.fit.final_trend = point2 - point1;
    cf.intervals.push_back({1, point1, point1 - hw1, point1 + hw1, 0.95, hw1 == 0.0});
    cf.intervals.push_back({2, point2, point2 - hw2, point2 + hw2, 0.95, hw2 == 0.0});
    return cf;
}

}  // namespace

TEST_CASE("excess table flags observations outside the interval") {
    std::vector<CountryForecast> forecasts;
    forecasts.push_back(make_forecast("AA", 1000.0, 50.0, 1010.0, 55.0));
    forecasts.push_back(make_forecast("BB", 2000.0, 10.0, 2000.0, 10.0));
    std::map<std::pair<std::string, int>, double> actuals = {
        {{"AA", 2020}, 1100.0},  // above the band
        {{"AA", 2021}, 1005.0},  // inside
        {{"BB", 2020}, 1985.0},  // below
        {{"BB", 2021}, 2000.0},  // exactly expected
    };
    const std::vector<ExcessRecord> table = build_excess_table(forecasts, actuals, {2020, 2021});
    REQUIRE(table.size() == 4);
    CHECK(table[0].excess == doctest::Approx(100.0));
    CHECK(table[0].outside_interval);
    CHECK(!table[1].outside_interval);
    CHECK(table[2].excess == doctest::Approx(-15.0));
    CHECK(table[2].outside_interval);
    CHECK(table[3].excess == doctest::Approx(0.0));
    CHECK(!table[3].outside_interval);
}

TEST_CASE("missing actuals are an error") {
    std::vector<CountryForecast> forecasts;
    forecasts.push_back(make_forecast("AA", 1000.0, 50.0, 1010.0, 55.0));
    std::map<std::pair<std::string, int>, double> actuals = {{{"AA", 2020}, 1100.0}};
    CHECK_THROWS_AS(build_excess_table(forecasts, actuals, {2020, 2021}), ValidationError);
}
