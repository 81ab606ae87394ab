#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "excessd/pipeline.hpp"
#include "excessd/report.hpp"

using namespace excessd;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("excessd_report_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary);
    out << body;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

// Four synthetic countries with rising mortality and covid figures.
RunConfig synthetic_config(const TempDir& tmp) {
    std::string deaths = "country_code,year,deaths\n";
    std::string covid = "country_code,year,cases,deaths\n";
    std::string registry = "country_code,name,numeric_id,population,land_area_km2,area_override_km2\n";
    const char* codes[4] = {"AA", "BB", "CC", "DD"};
    const double base[4] = {50000, 80000, 120000, 30000};
    const double slope[4] = {300, -150, 500, 120};
    const double wiggle[10] = {120, -80, 40, -160, 90, 30, -110, 60, -20, 80};
    for (int c = 0; c < 4; ++c) {
        for (int y = 0; y < 10; ++y) {
            const double v = base[c] + slope[c] * y + wiggle[(y + 2 * c) % 10];
            deaths += std::string(codes[c]) + "," + std::to_string(2010 + y) + "," +
                      std::to_string(static_cast<long>(v)) + "\n";
        }
        // pandemic years: clear excess over the trend continuation
        const double e20 = base[c] + slope[c] * 10 + 2500 + 400 * c;
        const double e21 = base[c] + slope[c] * 11 + 3100 + 500 * c;
        deaths += std::string(codes[c]) + ",2020," + std::to_string(static_cast<long>(e20)) + "\n";
        deaths += std::string(codes[c]) + ",2021," + std::to_string(static_cast<long>(e21)) + "\n";
        covid += std::string(codes[c]) + ",2020," + std::to_string(40000 + 9000 * c) + "," +
                 std::to_string(1800 + 350 * c) + "\n";
        covid += std::string(codes[c]) + ",2021," + std::to_string(90000 + 11000 * c) + "," +
                 std::to_string(2600 + 410 * c) + "\n";
        registry += std::string(codes[c]) + ",Country" + codes[c] + "," + std::to_string(c + 1) +
                    "," + std::to_string(4000000 + 2500000 * c) + "," +
                    std::to_string(50000 + 30000 * c) + ",\n";
    }
    write_file(tmp.path / "deaths.csv", deaths);
    write_file(tmp.path / "covid.csv", covid);
    write_file(tmp.path / "registry.csv", registry);

    RunConfig config;
    config.deaths_path = tmp.path / "deaths.csv";
    config.covid_path = tmp.path / "covid.csv";
    config.registry_path = tmp.path / "registry.csv";
    config.out_dir = tmp.path / "out";
    config.emit_charts = true;
    return config;
}

}  // namespace

TEST_CASE("pipeline emits the frozen schemas and deterministic bytes") {
    TempDir tmp;
    RunConfig config = synthetic_config(tmp);
    cmd_pipeline(config);

    const std::string forecasts = read_file(config.out_dir / "forecasts.csv");
    CHECK(first_line(forecasts) ==
          "country_code,year,expected,lower,upper,alpha,gamma,mad,method");
    const std::string excess = read_file(config.out_dir / "excess.csv");
    CHECK(first_line(excess) == "country_code,year,actual,expected,excess,outside_interval");
    const std::string indexes = read_file(config.out_dir / "indexes.csv");
    CHECK(first_line(indexes) ==
          "country_code,year,dc_by_cc,dc_by_em,declared_dc,dc_bar,d1,d2,d3,i_d,i_f,i_f_prime,"
          "rank_i_d,rank_i_f,rank_i_f_prime");
    CHECK(read_file(config.out_dir / "regressions.json").find("\"anova\"") != std::string::npos);
    CHECK(read_file(config.out_dir / "summary.json").find("dc_bar_totals") != std::string::npos);

    // 4 countries x 2 years everywhere
    int lines = -1;  // discount header
    for (char ch : forecasts)
        if (ch == '\n') ++lines;
    CHECK(lines == 8);

    CHECK(fs::exists(config.out_dir / "i_d_2020.svg"));
    CHECK(fs::exists(config.out_dir / "i_f_2021.svg"));
    CHECK(fs::exists(config.out_dir / "i_f_prime_2020.svg"));
    CHECK(fs::exists(config.out_dir / "trends_AA.svg"));

    // byte determinism across reruns
    RunConfig second = config;
    second.out_dir = tmp.path / "out2";
    cmd_pipeline(second);
    for (const auto& entry : fs::directory_iterator(config.out_dir)) {
        const fs::path other = second.out_dir / entry.path().filename();
        REQUIRE(fs::exists(other));
        CHECK(read_file(entry.path()) == read_file(other));
    }
}

TEST_CASE("summary totals equal the per-country sums") {
    TempDir tmp;
    RunConfig config = synthetic_config(tmp);
    const PipelineResult result = compute_pipeline(config);
    REQUIRE(result.years.size() == 2);
    for (const YearResults& yr : result.years) {
        double sum = 0.0;
        for (const IndexRow& row : yr.index_rows) sum += row.dc_bar;
        CHECK(yr.dc_bar_total == doctest::Approx(sum).epsilon(1e-12));
    }
}

TEST_CASE("single-country exclusion drops rows and bars") {
    TempDir tmp;
    RunConfig config = synthetic_config(tmp);
    config.exclude = {"BB"};
    const PipelineResult result = compute_pipeline(config);
    for (const YearResults& yr : result.years) {
        CHECK(yr.index_rows.size() == 3);
        for (const IndexRow& row : yr.index_rows) CHECK(row.country_code != "BB");
    }
}

TEST_CASE("validation failure without allow-partial aborts") {
    TempDir tmp;
    RunConfig config = synthetic_config(tmp);
    // drop one covid row
    std::string covid = read_file(tmp.path / "covid.csv");
    covid = covid.substr(0, covid.rfind("DD,2021"));
    write_file(tmp.path / "covid.csv", covid);
    CHECK_THROWS_AS(compute_pipeline(config), ValidationError);
    config.allow_partial = true;
    const PipelineResult result = compute_pipeline(config);
    CHECK(result.forecasts.size() == 3);  // DD dropped
}
