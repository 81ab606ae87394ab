#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "excessd/regression.hpp"

namespace excessd {

/// Registry entry: identity plus the demographic denominators.
struct CountryRecord {
    std::string country_code;  // EUROSTAT two-letter code
    std::string name;
    int numeric_id = 0;  // 1-based position in the reference registry
    double population = 0.0;
    double land_area = 0.0;  // km^2
    std::optional<double> area_override;  // km^2, e.g. inhabitable share

    double effective_area() const { return area_override ? *area_override : land_area; }
};

/// Standardized death triple: min predicted, max predicted, declared.
struct DcTriple {
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};

struct IndexRow {
    std::string country_code;
    double dc_by_cc = 0.0;
    double dc_by_em = 0.0;
    double declared_dc = 0.0;
    double dc_bar = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double i_d = 0.0;
    double i_f = 0.0;
    double i_f_prime = 0.0;
    int rank_i_d = 0;
    int rank_i_f = 0;
    int rank_i_f_prime = 0;
};

enum class RankKey { Discrepancy, FatalImpact, FatalityRate };

/// Deaths per `unit` persons.
double standardize(double dc, double population, double unit = 100000.0);

/// Band width plus the distance of the declared value from the band midpoint.
double discrepancy_index(const DcTriple& t);

double mean_predicted_dc(double dc_by_cc, double dc_by_em);

/// dc_bar / (population * effective area).
double fatal_impact(double dc_bar, const CountryRecord& record);

/// dc_bar / population.
double fatality_rate(double dc_bar, const CountryRecord& record);

/// Country codes in descending index order; ties broken lexicographically,
/// exclusions dropped before ranking.
std::vector<std::string> rank_countries(const std::vector<IndexRow>& rows, RankKey key,
                                        const std::set<std::string>& exclude = {});

/// Assembles the per-country index table (sorted by country code) from the
/// dual predictions; excluded countries are dropped before ranking.
std::vector<IndexRow> build_index_table(const std::vector<DcPrediction>& predictions,
                                        const std::vector<CountryRecord>& registry,
                                        double std_unit = 100000.0,
                                        const std::set<std::string>& exclude = {});

/// The built-in 27-country registry with reference populations and land areas.
const std::vector<CountryRecord>& eu27_registry();

}  // namespace excessd
