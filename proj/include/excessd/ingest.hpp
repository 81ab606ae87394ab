#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "excessd/annual_series.hpp"
#include "excessd/indexes.hpp"

namespace excessd {

using CountryYear = std::pair<std::string, int>;

struct DeathsTable {
    std::map<CountryYear, double> deaths;
    std::vector<std::string> warnings;
};

struct CovidTable {
    std::map<CountryYear, double> cases;
    std::map<CountryYear, double> declared_deaths;
    std::vector<std::string> warnings;
};

/// Immutable input bundle keyed by country and year.
struct DatasetBundle {
    std::map<CountryYear, double> deaths;
    std::map<CountryYear, double> covid_cases;
    std::map<CountryYear, double> covid_deaths_declared;
    std::vector<CountryRecord> registry;
    int fit_start = 0;
    int fit_end = 0;
    std::vector<int> target_years;
    std::vector<std::string> warnings;
};

struct Violation {
    std::string country_code;  // empty for bundle-wide violations
    int year = 0;
    std::string field;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// Long-format loaders; header, one row per country-year, UTF-8, LF or CRLF.
/// Malformed cells, duplicate keys and negative values fail with line numbers.
DeathsTable load_deaths_csv(const std::filesystem::path& path);
CovidTable load_covid_csv(const std::filesystem::path& path);
std::vector<CountryRecord> load_registry_csv(const std::filesystem::path& path);

DatasetBundle make_bundle(DeathsTable deaths, CovidTable covid,
                          std::vector<CountryRecord> registry, int fit_start, int fit_end,
                          std::vector<int> target_years);

/// Checks completeness of the bundle against its registry and the horizon
/// constraints; produces a report rather than throwing.
ValidationReport validate_bundle(const DatasetBundle& bundle, int max_horizon = 2);

/// Drops registry countries named in the report (used by --allow-partial).
void drop_violating_countries(DatasetBundle& bundle, const ValidationReport& report);

/// The country's deaths over the fit window as a contiguous series.
AnnualSeries fit_window_series(const DatasetBundle& bundle, const std::string& country_code);

/// Canonical serialization; reloading reproduces the bundle exactly.
void write_deaths_csv(const DatasetBundle& bundle, const std::filesystem::path& path);
void write_covid_csv(const DatasetBundle& bundle, const std::filesystem::path& path);
void write_registry_csv(const std::vector<CountryRecord>& registry,
                        const std::filesystem::path& path);

}  // namespace excessd
