#include "excessd/pipeline.hpp"

#include <algorithm>

#include "excessd/errors.hpp"
#include "excessd/report.hpp"

namespace excessd {

namespace {

DatasetBundle load_bundle(const RunConfig& config) {
    DeathsTable deaths = load_deaths_csv(config.deaths_path);
    CovidTable covid = load_covid_csv(config.covid_path);
    std::vector<CountryRecord> registry = config.registry_path.empty()
                                              ? eu27_registry()
                                              : load_registry_csv(config.registry_path);
    for (CountryRecord& rec : registry) {
        const auto it = config.area_overrides.find(rec.country_code);
        if (it != config.area_overrides.end()) rec.area_override = it->second;
    }
    DatasetBundle bundle = make_bundle(std::move(deaths), std::move(covid), std::move(registry),
                                       config.fit_start, config.fit_end, config.target_years);
    ValidationReport report = validate_bundle(bundle, config.max_horizon);
    if (!report.ok()) {
        if (!config.allow_partial)
            throw ValidationError("bundle validation failed:\n" + report.to_string());
        drop_violating_countries(bundle, report);
    }
    return bundle;
}

}  // namespace

PipelineResult compute_pipeline(const RunConfig& config) {
    if (!(config.coverage > 0.0 && config.coverage < 1.0))
        throw ValidationError("coverage must lie in (0, 1)");
    if (!(config.std_unit > 0.0)) throw ValidationError("standardization unit must be > 0");

    PipelineResult result;
    result.bundle = load_bundle(config);
    const DatasetBundle& bundle = result.bundle;

    // Per-country fits, in country-code order so every output is deterministic.
    std::vector<std::string> failures;
    for (const CountryRecord& rec : bundle.registry) {
        try {
            const AnnualSeries series = fit_window_series(bundle, rec.country_code);
            CountryForecast cf;
            cf.country_code = rec.country_code;
            cf.fit = fit_series(series, config.backend, config.mad_window);
            if (!cf.fit.converged)
                result.estimation_warnings.push_back(rec.country_code +
                                                     ": optimizer hit the iteration cap");
            if (cf.fit.degenerate)
                result.estimation_warnings.push_back(rec.country_code +
                                                     ": linear series, smoothing constants set to 0");
            for (std::size_t h = 0; h < bundle.target_years.size(); ++h) {
                cf.intervals.push_back(
                    prediction_interval(cf.fit, static_cast<int>(h) + 1, config.coverage));
            }
            result.forecasts.push_back(std::move(cf));
        } catch (const std::exception& e) {
            failures.push_back(rec.country_code + ": " + e.what());
        }
    }
    if (!failures.empty() && !config.allow_partial) {
        std::string what = "estimation failed for " + std::to_string(failures.size()) + " countries:";
        for (const std::string& f : failures) what += "\n  " + f;
        throw EstimationError(what);
    }

    result.excess = build_excess_table(result.forecasts, bundle.deaths, bundle.target_years);

    for (std::size_t h = 0; h < bundle.target_years.size(); ++h) {
        const int year = bundle.target_years[h];
        std::vector<DcInputs> inputs;
        inputs.reserve(result.forecasts.size());
        for (const CountryForecast& cf : result.forecasts) {
            DcInputs in;
            in.country_code = cf.country_code;
            in.covid_cases = bundle.covid_cases.at({cf.country_code, year});
            in.declared_dc = bundle.covid_deaths_declared.at({cf.country_code, year});
            in.excess = excess_mortality(bundle.deaths.at({cf.country_code, year}),
                                         cf.intervals.at(h).point);
            inputs.push_back(std::move(in));
        }
        YearResults yr;
        yr.year = year;
        yr.regressions = fit_year_regressions(inputs, year);
        yr.predictions = build_dc_predictions(yr.regressions, inputs);
        yr.index_rows = build_index_table(yr.predictions, bundle.registry, config.std_unit,
                                          config.exclude);
        for (const IndexRow& row : yr.index_rows) yr.dc_bar_total += row.dc_bar;
        result.years.push_back(std::move(yr));
    }
    return result;
}

namespace {

std::filesystem::path prepare_out_dir(const RunConfig& config) {
    std::error_code ec;
    std::filesystem::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + config.out_dir.string());
    return config.out_dir;
}

}  // namespace

void cmd_forecast(const RunConfig& config) {
    const PipelineResult result = compute_pipeline(config);
    write_forecasts_csv(result, prepare_out_dir(config) / "forecasts.csv");
}

void cmd_excess(const RunConfig& config) {
    const PipelineResult result = compute_pipeline(config);
    write_excess_csv(result, prepare_out_dir(config) / "excess.csv");
}

void cmd_regress(const RunConfig& config) {
    const PipelineResult result = compute_pipeline(config);
    write_regressions_json(result, prepare_out_dir(config) / "regressions.json");
}

void cmd_indexes(const RunConfig& config) {
    const PipelineResult result = compute_pipeline(config);
    const std::filesystem::path dir = prepare_out_dir(config);
    write_indexes_csv(result, dir / "indexes.csv");
    if (config.emit_charts) write_charts(result, dir);
}

void cmd_pipeline(const RunConfig& config) {
    const PipelineResult result = compute_pipeline(config);
    const std::filesystem::path dir = prepare_out_dir(config);
    if (config.emit_tables) {
        write_forecasts_csv(result, dir / "forecasts.csv");
        write_excess_csv(result, dir / "excess.csv");
        write_regressions_json(result, dir / "regressions.json");
        write_indexes_csv(result, dir / "indexes.csv");
    }
    write_summary_json(result, dir / "summary.json");
    if (config.emit_charts) write_charts(result, dir);
}

}  // namespace excessd
