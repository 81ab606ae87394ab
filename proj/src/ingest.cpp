#include "excessd/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "excessd/errors.hpp"
#include "excessd/format.hpp"

namespace excessd {

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string content = buffer.str();
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t nl = content.find('\n', pos);
        std::string line = nl == std::string::npos ? content.substr(pos)
                                                   : content.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(std::move(line));
        if (nl == std::string::npos) break;
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return fields;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path, std::size_t line_no,
                             const std::string& what) {
    throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

double parse_number(const std::string& cell, const std::filesystem::path& path,
                    std::size_t line_no, const std::string& field) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        parse_fail(path, line_no, "non-numeric " + field + " '" + cell + "'");
    return value;
}

int parse_year(const std::string& cell, const std::filesystem::path& path, std::size_t line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size())
        parse_fail(path, line_no, "non-numeric year '" + cell + "'");
    return value;
}

void require_header(const std::vector<std::string>& lines, const std::string& expected,
                    const std::filesystem::path& path) {
    if (lines.empty() || lines[0] != expected)
        throw ValidationError(path.string() + ":1: expected header '" + expected + "'");
}

}  // namespace

std::string ValidationReport::to_string() const {
    std::string out;
    for (const Violation& v : violations) {
        if (!out.empty()) out += '\n';
        out += v.country_code.empty() ? std::string("<bundle>") : v.country_code;
        if (v.year != 0) out += "/" + std::to_string(v.year);
        out += "/" + v.field + ": " + v.message;
    }
    return out;
}

DeathsTable load_deaths_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    require_header(lines, "country_code,year,deaths", path);
    DeathsTable table;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 3) parse_fail(path, i + 1, "expected 3 fields, got " + std::to_string(f.size()));
        const int year = parse_year(f[1], path, i + 1);
        const double deaths = parse_number(f[2], path, i + 1, "deaths");
        if (deaths < 0.0) parse_fail(path, i + 1, "negative deaths");
        if (!table.deaths.emplace(CountryYear{f[0], year}, deaths).second)
            parse_fail(path, i + 1, "duplicate country-year " + f[0] + "/" + f[1]);
    }
    if (table.deaths.empty()) table.warnings.push_back(path.string() + ": no data rows");
    return table;
}

CovidTable load_covid_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    require_header(lines, "country_code,year,cases,deaths", path);
    CovidTable table;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 4) parse_fail(path, i + 1, "expected 4 fields, got " + std::to_string(f.size()));
        const int year = parse_year(f[1], path, i + 1);
        const double cases = parse_number(f[2], path, i + 1, "cases");
        const double deaths = parse_number(f[3], path, i + 1, "deaths");
        if (cases < 0.0) parse_fail(path, i + 1, "negative cases");
        if (deaths < 0.0) parse_fail(path, i + 1, "negative deaths");
        const CountryYear key{f[0], year};
        if (!table.cases.emplace(key, cases).second)
            parse_fail(path, i + 1, "duplicate country-year " + f[0] + "/" + f[1]);
        table.declared_deaths.emplace(key, deaths);
        if (cases == 0.0 && deaths > 0.0)
            table.warnings.push_back(f[0] + "/" + f[1] + ": declared deaths with zero cases");
    }
    if (table.cases.empty()) table.warnings.push_back(path.string() + ": no data rows");
    return table;
}

std::vector<CountryRecord> load_registry_csv(const std::filesystem::path& path) {
    const std::vector<std::string> lines = read_lines(path);
    require_header(lines, "country_code,name,numeric_id,population,land_area_km2,area_override_km2",
                   path);
    std::vector<CountryRecord> registry;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 6) parse_fail(path, i + 1, "expected 6 fields, got " + std::to_string(f.size()));
        CountryRecord rec;
        rec.country_code = f[0];
        rec.name = f[1];
        rec.numeric_id = parse_year(f[2], path, i + 1);
        rec.population = parse_number(f[3], path, i + 1, "population");
        rec.land_area = parse_number(f[4], path, i + 1, "land_area_km2");
        if (!f[5].empty()) rec.area_override = parse_number(f[5], path, i + 1, "area_override_km2");
        if (rec.population <= 0.0) parse_fail(path, i + 1, "population must be > 0");
        if (rec.land_area <= 0.0) parse_fail(path, i + 1, "land_area_km2 must be > 0");
        if (rec.area_override && *rec.area_override <= 0.0)
            parse_fail(path, i + 1, "area_override_km2 must be > 0");
        for (const CountryRecord& other : registry) {
            if (other.country_code == rec.country_code)
                parse_fail(path, i + 1, "duplicate country " + rec.country_code);
            if (other.numeric_id == rec.numeric_id)
                parse_fail(path, i + 1, "duplicate numeric_id " + std::to_string(rec.numeric_id));
        }
        registry.push_back(std::move(rec));
    }
    if (registry.empty()) throw ValidationError(path.string() + ": empty registry");
    return registry;
}

DatasetBundle make_bundle(DeathsTable deaths, CovidTable covid,
                          std::vector<CountryRecord> registry, int fit_start, int fit_end,
                          std::vector<int> target_years) {
    DatasetBundle bundle;
    bundle.deaths = std::move(deaths.deaths);
    bundle.covid_cases = std::move(covid.cases);
    bundle.covid_deaths_declared = std::move(covid.declared_deaths);
    bundle.registry = std::move(registry);
    bundle.fit_start = fit_start;
    bundle.fit_end = fit_end;
    bundle.target_years = std::move(target_years);
    bundle.warnings = std::move(deaths.warnings);
    bundle.warnings.insert(bundle.warnings.end(), covid.warnings.begin(), covid.warnings.end());
    std::sort(bundle.registry.begin(), bundle.registry.end(),
              [](const CountryRecord& a, const CountryRecord& b) {
                  return a.country_code < b.country_code;
              });
    return bundle;
}

ValidationReport validate_bundle(const DatasetBundle& bundle, int max_horizon) {
    ValidationReport report;
    if (bundle.fit_start > bundle.fit_end)
        report.violations.push_back({"", 0, "fit_window", "empty fit window"});
    if (bundle.target_years.empty())
        report.violations.push_back({"", 0, "target_years", "no target years"});
    for (std::size_t i = 0; i < bundle.target_years.size(); ++i) {
        const int expected = bundle.fit_end + 1 + static_cast<int>(i);
        if (bundle.target_years[i] != expected) {
            report.violations.push_back({"", bundle.target_years[i], "target_years",
                                         "target years must be consecutive from the window end"});
            break;
        }
    }
    if (!bundle.target_years.empty() &&
        bundle.target_years.back() - bundle.fit_end > max_horizon) {
        report.violations.push_back({"", bundle.target_years.back(), "target_years",
                                     "horizon exceeds " + std::to_string(max_horizon) +
                                         " (raise --max-horizon to override)"});
    }
    for (const CountryRecord& rec : bundle.registry) {
        for (int year = bundle.fit_start; year <= bundle.fit_end; ++year) {
            if (!bundle.deaths.count({rec.country_code, year}))
                report.violations.push_back({rec.country_code, year, "deaths", "missing"});
        }
        for (int year : bundle.target_years) {
            if (!bundle.deaths.count({rec.country_code, year}))
                report.violations.push_back({rec.country_code, year, "deaths", "missing"});
            if (!bundle.covid_cases.count({rec.country_code, year}))
                report.violations.push_back({rec.country_code, year, "cases", "missing"});
            if (!bundle.covid_deaths_declared.count({rec.country_code, year}))
                report.violations.push_back({rec.country_code, year, "covid_deaths", "missing"});
        }
    }
    return report;
}

void drop_violating_countries(DatasetBundle& bundle, const ValidationReport& report) {
    std::set<std::string> bad;
    for (const Violation& v : report.violations) {
        if (v.country_code.empty())
            throw ValidationError("bundle-wide violation cannot be dropped: " + v.message);
        bad.insert(v.country_code);
    }
    std::erase_if(bundle.registry,
                  [&bad](const CountryRecord& r) { return bad.count(r.country_code) > 0; });
    if (bundle.registry.empty())
        throw ValidationError("no countries left after dropping violations");
}

AnnualSeries fit_window_series(const DatasetBundle& bundle, const std::string& country_code) {
    const int n = bundle.fit_end - bundle.fit_start + 1;
    Eigen::VectorXd values(n);
    for (int i = 0; i < n; ++i) {
        const auto it = bundle.deaths.find({country_code, bundle.fit_start + i});
        if (it == bundle.deaths.end())
            throw ValidationError("missing deaths for " + country_code + "/" +
                                  std::to_string(bundle.fit_start + i));
        values[i] = it->second;
    }
    return AnnualSeries(country_code, bundle.fit_start, std::move(values));
}

void write_deaths_csv(const DatasetBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "country_code,year,deaths\n";
    for (const auto& [key, value] : bundle.deaths)
        out << key.first << ',' << key.second << ',' << format_number(value) << '\n';
}

void write_covid_csv(const DatasetBundle& bundle, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "country_code,year,cases,deaths\n";
    for (const auto& [key, cases] : bundle.covid_cases) {
        const auto it = bundle.covid_deaths_declared.find(key);
        const double declared = it == bundle.covid_deaths_declared.end() ? 0.0 : it->second;
        out << key.first << ',' << key.second << ',' << format_number(cases) << ','
            << format_number(declared) << '\n';
    }
}

void write_registry_csv(const std::vector<CountryRecord>& registry,
                        const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << "country_code,name,numeric_id,population,land_area_km2,area_override_km2\n";
    for (const CountryRecord& rec : registry) {
        out << rec.country_code << ',' << rec.name << ',' << rec.numeric_id << ','
            << format_number(rec.population) << ',' << format_number(rec.land_area) << ',';
        if (rec.area_override) out << format_number(*rec.area_override);
        out << '\n';
    }
}

}  // namespace excessd
