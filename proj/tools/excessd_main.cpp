#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "excessd/errors.hpp"
#include "excessd/pipeline.hpp"

namespace {

struct CliOptions {
    excessd::RunConfig config;
    std::string fit_window = "2010:2019";
    std::string targets = "2020,2021";
    std::string backend = "arima-init";
    std::string mad_window = "all";
    std::string exclude;
    std::vector<std::string> area_overrides;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t next = text.find(sep, pos);
        if (next == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return parts;
}

void finalize(CliOptions& opt) {
    using excessd::ValidationError;

    const std::vector<std::string> window = split(opt.fit_window, ':');
    if (window.size() != 2) throw ValidationError("--fit-window expects START:END");
    opt.config.fit_start = std::stoi(window[0]);
    opt.config.fit_end = std::stoi(window[1]);

    opt.config.target_years.clear();
    for (const std::string& part : split(opt.targets, ','))
        if (!part.empty()) opt.config.target_years.push_back(std::stoi(part));
    if (opt.config.target_years.empty()) throw ValidationError("--targets expects a year list");

    if (opt.backend == "arima-init") {
        opt.config.backend = excessd::EstimationMethod::ArimaInit;
    } else if (opt.backend == "direct-sse") {
        opt.config.backend = excessd::EstimationMethod::DirectSse;
    } else {
        throw ValidationError("--backend must be arima-init or direct-sse");
    }

    if (opt.mad_window == "all") {
        opt.config.mad_window = excessd::MadWindow::All;
    } else if (opt.mad_window == "skip-first") {
        opt.config.mad_window = excessd::MadWindow::SkipFirst;
    } else {
        throw ValidationError("--mad-window must be all or skip-first");
    }

    for (const std::string& part : split(opt.exclude, ','))
        if (!part.empty()) opt.config.exclude.insert(part);

    for (const std::string& entry : opt.area_overrides) {
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos)
            throw ValidationError("--area-override expects CODE=KM2, got '" + entry + "'");
        opt.config.area_overrides[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }

    if (opt.config.out_dir.empty()) {
        const char* env = std::getenv("EXCESSD_OUT");
        opt.config.out_dir = env && *env ? env : "out";
    }
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--deaths", opt.config.deaths_path, "all-cause deaths CSV (country_code,year,deaths)")
        ->required();
    cmd->add_option("--covid", opt.config.covid_path, "covid CSV (country_code,year,cases,deaths)")
        ->required();
    cmd->add_option("--registry", opt.config.registry_path,
                    "registry CSV overriding the built-in country table");
    cmd->add_option("--fit-window", opt.fit_window, "history window, START:END (default 2010:2019)");
    cmd->add_option("--targets", opt.targets, "comma-separated forecast years (default 2020,2021)");
    cmd->add_option("--backend", opt.backend, "estimation backend: arima-init | direct-sse");
    cmd->add_option("--coverage", opt.config.coverage, "prediction interval coverage (default 0.95)");
    cmd->add_option("--std-unit", opt.config.std_unit,
                    "standardization unit in persons (default 100000)");
    cmd->add_option("--mad-window", opt.mad_window, "residual window for MAD: all | skip-first");
    cmd->add_option("--exclude", opt.exclude, "country codes dropped from rankings, e.g. CY,LU,MT");
    cmd->add_option("--area-override", opt.area_overrides,
                    "effective land area override, CODE=KM2 (repeatable)");
    cmd->add_option("--max-horizon", opt.config.max_horizon,
                    "maximum forecast horizon accepted at validation (default 2)");
    cmd->add_flag("--allow-partial", opt.config.allow_partial,
                  "drop countries with incomplete data or failed fits instead of aborting");
    cmd->add_flag("--charts", opt.config.emit_charts, "emit SVG charts");
    cmd->add_option("--out", opt.config.out_dir,
                    "output directory (default: $EXCESSD_OUT, else ./out)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"excessd: baseline mortality forecasts, excess mortality, covid-death "
                 "cross-predictions and country impact indexes"};
    app.require_subcommand(1);

    CliOptions opt;
    const char* env = std::getenv("EXCESSD_OUT");
    opt.config.out_dir = env && *env ? env : "";

    CLI::App* forecast = app.add_subcommand("forecast", "per-country baseline forecast table");
    CLI::App* excess = app.add_subcommand("excess", "actual-vs-expected excess mortality table");
    CLI::App* regress = app.add_subcommand("regress", "log-log regression report");
    CLI::App* indexes = app.add_subcommand("indexes", "index tables and rankings");
    CLI::App* pipeline = app.add_subcommand("pipeline", "run every stage and write a summary");
    for (CLI::App* cmd : {forecast, excess, regress, indexes, pipeline})
        add_common_options(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        finalize(opt);
        if (forecast->parsed()) excessd::cmd_forecast(opt.config);
        if (excess->parsed()) excessd::cmd_excess(opt.config);
        if (regress->parsed()) excessd::cmd_regress(opt.config);
        if (indexes->parsed()) excessd::cmd_indexes(opt.config);
        if (pipeline->parsed()) excessd::cmd_pipeline(opt.config);
    } catch (const excessd::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const excessd::EstimationError& e) {
        std::cerr << "estimation error: " << e.what() << '\n';
        return 2;
    } catch (const excessd::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
