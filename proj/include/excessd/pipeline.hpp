#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "excessd/excess.hpp"
#include "excessd/holt.hpp"
#include "excessd/indexes.hpp"
#include "excessd/ingest.hpp"
#include "excessd/regression.hpp"

namespace excessd {

/// Everything a run needs; flags mirror the command line one-to-one.
struct RunConfig {
    std::filesystem::path deaths_path;
    std::filesystem::path covid_path;
    std::filesystem::path registry_path;  // empty: use the built-in registry
    int fit_start = 2010;
    int fit_end = 2019;
    std::vector<int> target_years = {2020, 2021};
    EstimationMethod backend = EstimationMethod::ArimaInit;
    double coverage = 0.95;
    double std_unit = 100000.0;
    MadWindow mad_window = MadWindow::All;
    std::map<std::string, double> area_overrides;
    std::filesystem::path out_dir = "out";
    bool emit_tables = true;
    bool emit_charts = false;
    std::set<std::string> exclude;  // dropped from rankings and index output
    bool allow_partial = false;
    int max_horizon = 2;
};

struct YearResults {
    int year = 0;
    YearRegressions regressions;
    std::vector<DcPrediction> predictions;
    std::vector<IndexRow> index_rows;
    double dc_bar_total = 0.0;
};

struct PipelineResult {
    DatasetBundle bundle;
    std::vector<CountryForecast> forecasts;  // ordered by country code
    std::vector<ExcessRecord> excess;
    std::vector<YearResults> years;
    std::vector<std::string> estimation_warnings;
};

/// Loads, validates, fits and computes every stage; writes nothing.
PipelineResult compute_pipeline(const RunConfig& config);

/// Subcommand drivers: run the pipeline and emit the owned artifacts under
/// config.out_dir. cmd_pipeline emits everything plus summary.json.
void cmd_forecast(const RunConfig& config);
void cmd_excess(const RunConfig& config);
void cmd_regress(const RunConfig& config);
void cmd_indexes(const RunConfig& config);
void cmd_pipeline(const RunConfig& config);

}  // namespace excessd
