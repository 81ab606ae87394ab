#include "excessd/report.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

#include "excessd/errors.hpp"
#include "excessd/format.hpp"
#include "excessd/svg.hpp"

namespace excessd {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

const char* method_name(EstimationMethod method) {
    return method == EstimationMethod::ArimaInit ? "arima-init" : "direct-sse";
}

nlohmann::ordered_json fit_json(const LogLogFit& fit, const std::string& predictor) {
    nlohmann::ordered_json j;
    j["predictor"] = predictor;
    j["scale"] = fit.scale == FitScale::Log10 ? "log10" : "natural";
    j["intercept"] = fit.intercept;
    j["slope"] = fit.slope;
    j["n"] = fit.n;
    nlohmann::ordered_json excluded = nlohmann::ordered_json::array();
    for (const ExcludedPoint& e : fit.excluded)
        excluded.push_back({{"country_code", e.label}, {"reason", e.reason}});
    j["excluded"] = std::move(excluded);
    nlohmann::ordered_json anova;
    anova["ss_regression"] = fit.anova.ss_regression;
    anova["ss_error"] = fit.anova.ss_error;
    anova["ss_total"] = fit.anova.ss_total;
    anova["df_regression"] = fit.anova.df_regression;
    anova["df_error"] = fit.anova.df_error;
    anova["f_stat"] = fit.anova.f_stat;
    anova["p_value"] = std::round(fit.anova.p_value * 1000.0) / 1000.0;
    j["anova"] = std::move(anova);
    return j;
}

}  // namespace

void write_forecasts_csv(const PipelineResult& result, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "country_code,year,expected,lower,upper,alpha,gamma,mad,method\n";
    for (const CountryForecast& cf : result.forecasts) {
        for (std::size_t h = 0; h < result.bundle.target_years.size(); ++h) {
            const ForecastInterval& iv = cf.intervals.at(h);
            out << cf.country_code << ',' << result.bundle.target_years[h] << ','
                << format_number(iv.point) << ',' << format_number(iv.lower) << ','
                << format_number(iv.upper) << ',' << format_number(cf.fit.params.alpha) << ','
                << format_number(cf.fit.params.gamma) << ',' << format_number(cf.fit.mad) << ','
                << method_name(cf.fit.method) << '\n';
        }
    }
}

void write_excess_csv(const PipelineResult& result, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "country_code,year,actual,expected,excess,outside_interval\n";
    for (const ExcessRecord& rec : result.excess) {
        out << rec.country_code << ',' << rec.year << ',' << format_number(rec.actual_deaths)
            << ',' << format_number(rec.expected_deaths) << ',' << format_number(rec.excess)
            << ',' << (rec.outside_interval ? "true" : "false") << '\n';
    }
}

void write_regressions_json(const PipelineResult& result, const std::filesystem::path& path) {
    nlohmann::ordered_json root;
    nlohmann::ordered_json years = nlohmann::ordered_json::array();
    for (const YearResults& yr : result.years) {
        nlohmann::ordered_json item;
        item["year"] = yr.year;
        nlohmann::ordered_json fits = nlohmann::ordered_json::array();
        fits.push_back(fit_json(yr.regressions.by_cc, "cc"));
        fits.push_back(fit_json(yr.regressions.by_em, "em"));
        nlohmann::ordered_json natural = fit_json(yr.regressions.em_natural, "em");
        natural["fallback_full_sample"] = true;
        fits.push_back(std::move(natural));
        item["fits"] = std::move(fits);
        years.push_back(std::move(item));
    }
    root["years"] = std::move(years);
    std::ofstream out = open_out(path);
    out << root.dump(2) << '\n';
}

void write_indexes_csv(const PipelineResult& result, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << "country_code,year,dc_by_cc,dc_by_em,declared_dc,dc_bar,d1,d2,d3,i_d,i_f,i_f_prime,"
           "rank_i_d,rank_i_f,rank_i_f_prime\n";
    for (const YearResults& yr : result.years) {
        for (const IndexRow& row : yr.index_rows) {
            out << row.country_code << ',' << yr.year << ',' << format_number(row.dc_by_cc) << ','
                << format_number(row.dc_by_em) << ',' << format_number(row.declared_dc) << ','
                << format_number(row.dc_bar) << ',' << format_number(row.d1) << ','
                << format_number(row.d2) << ',' << format_number(row.d3) << ','
                << format_number(row.i_d) << ',' << format_number(row.i_f) << ','
                << format_number(row.i_f_prime) << ',' << row.rank_i_d << ',' << row.rank_i_f
                << ',' << row.rank_i_f_prime << '\n';
        }
    }
}

void write_summary_json(const PipelineResult& result, const std::filesystem::path& path) {
    nlohmann::ordered_json totals;
    for (const YearResults& yr : result.years)
        totals[std::to_string(yr.year)] = yr.dc_bar_total;
    nlohmann::ordered_json root;
    root["dc_bar_totals"] = std::move(totals);
    std::ofstream out = open_out(path);
    out << root.dump(2) << '\n';
}

void write_charts(const PipelineResult& result, const std::filesystem::path& dir) {
    for (const YearResults& yr : result.years) {
        const std::string year = std::to_string(yr.year);
        const struct {
            RankKey key;
            const char* stem;
            const char* label;
            double IndexRow::*field;
        } charts[] = {
            {RankKey::Discrepancy, "i_d_", "discrepancy index ", &IndexRow::i_d},
            {RankKey::FatalImpact, "i_f_", "fatal impact index ", &IndexRow::i_f},
            {RankKey::FatalityRate, "i_f_prime_", "fatality rate ", &IndexRow::i_f_prime},
        };
        for (const auto& chart : charts) {
            const std::vector<std::string> order = rank_countries(yr.index_rows, chart.key);
            std::vector<BarItem> items;
            items.reserve(order.size());
            for (const std::string& code : order) {
                for (const IndexRow& row : yr.index_rows) {
                    if (row.country_code == code) {
                        items.push_back({code, row.*chart.field});
                        break;
                    }
                }
            }
            std::ofstream out = open_out(dir / (chart.stem + year + ".svg"));
            out << bar_chart_svg(chart.label + year, items);
        }
    }

    for (const CountryForecast& cf : result.forecasts) {
        std::vector<double> values;
        for (int y = result.bundle.fit_start; y <= result.bundle.fit_end; ++y)
            values.push_back(result.bundle.deaths.at({cf.country_code, y}));
        std::vector<ForecastPoint> points;
        for (std::size_t h = 0; h < result.bundle.target_years.size(); ++h) {
            const ForecastInterval& iv = cf.intervals.at(h);
            points.push_back({result.bundle.target_years[h], iv.point, iv.lower, iv.upper});
        }
        std::ofstream out = open_out(dir / ("trends_" + cf.country_code + ".svg"));
        out << line_chart_svg("all-cause deaths " + cf.country_code,
                              result.bundle.fit_start, values, points);
    }
}

}  // namespace excessd
