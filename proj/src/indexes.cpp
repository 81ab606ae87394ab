#include "excessd/indexes.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "excessd/errors.hpp"

namespace excessd {

double standardize(double dc, double population, double unit) {
    if (!(population > 0.0)) throw std::invalid_argument("standardize: population must be > 0");
    if (!(unit > 0.0)) throw std::invalid_argument("standardize: unit must be > 0");
    return dc * unit / population;
}

double discrepancy_index(const DcTriple& t) {
    if (t.d1 > t.d2) throw std::invalid_argument("discrepancy_index: requires d1 <= d2");
    return (t.d2 - t.d1) + std::fabs(t.d3 - 0.5 * (t.d1 + t.d2));
}

double mean_predicted_dc(double dc_by_cc, double dc_by_em) {
    return 0.5 * (dc_by_cc + dc_by_em);
}

double fatal_impact(double dc_bar, const CountryRecord& record) {
    if (!(record.population > 0.0)) throw std::invalid_argument("fatal_impact: population must be > 0");
    if (!(record.effective_area() > 0.0)) throw std::invalid_argument("fatal_impact: area must be > 0");
    return dc_bar / (record.population * record.effective_area());
}

double fatality_rate(double dc_bar, const CountryRecord& record) {
    if (!(record.population > 0.0)) throw std::invalid_argument("fatality_rate: population must be > 0");
    return dc_bar / record.population;
}

namespace {

double key_value(const IndexRow& row, RankKey key) {
    switch (key) {
        case RankKey::Discrepancy: return row.i_d;
        case RankKey::FatalImpact: return row.i_f;
        case RankKey::FatalityRate: return row.i_f_prime;
    }
    throw std::invalid_argument("rank_countries: unknown key");
}

}  // namespace

std::vector<std::string> rank_countries(const std::vector<IndexRow>& rows, RankKey key,
                                        const std::set<std::string>& exclude) {
    std::vector<const IndexRow*> kept;
    kept.reserve(rows.size());
    for (const IndexRow& row : rows)
        if (!exclude.count(row.country_code)) kept.push_back(&row);
    if (kept.empty()) throw ValidationError("rank_countries: no rows to rank");
    std::stable_sort(kept.begin(), kept.end(), [key](const IndexRow* a, const IndexRow* b) {
        const double va = key_value(*a, key);
        const double vb = key_value(*b, key);
        if (va != vb) return va > vb;
        return a->country_code < b->country_code;
    });
    std::vector<std::string> order;
    order.reserve(kept.size());
    for (const IndexRow* row : kept) order.push_back(row->country_code);
    return order;
}

std::vector<IndexRow> build_index_table(const std::vector<DcPrediction>& predictions,
                                        const std::vector<CountryRecord>& registry,
                                        double std_unit,
                                        const std::set<std::string>& exclude) {
    std::map<std::string, const CountryRecord*> by_code;
    for (const CountryRecord& rec : registry) by_code[rec.country_code] = &rec;

    std::vector<IndexRow> rows;
    rows.reserve(predictions.size());
    for (const DcPrediction& p : predictions) {
        if (exclude.count(p.country_code)) continue;
        const auto it = by_code.find(p.country_code);
        if (it == by_code.end())
            throw ValidationError("indexes: country " + p.country_code + " missing from registry");
        const CountryRecord& rec = *it->second;

        IndexRow row;
        row.country_code = p.country_code;
        row.dc_by_cc = p.dc_by_cc;
        row.dc_by_em = p.dc_by_em;
        row.declared_dc = p.declared_dc;
        row.dc_bar = mean_predicted_dc(p.dc_by_cc, p.dc_by_em);
        // the d1 <= d2 ordering is established here, never trusted from input
        const double lo = std::min(p.dc_by_cc, p.dc_by_em);
        const double hi = std::max(p.dc_by_cc, p.dc_by_em);
        row.d1 = standardize(lo, rec.population, std_unit);
        row.d2 = standardize(hi, rec.population, std_unit);
        row.d3 = standardize(p.declared_dc, rec.population, std_unit);
        row.i_d = discrepancy_index({row.d1, row.d2, row.d3});
        row.i_f = fatal_impact(row.dc_bar, rec);
        row.i_f_prime = fatality_rate(row.dc_bar, rec);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const IndexRow& a, const IndexRow& b) { return a.country_code < b.country_code; });

    const struct {
        RankKey key;
        int IndexRow::*field;
    } keys[] = {{RankKey::Discrepancy, &IndexRow::rank_i_d},
                {RankKey::FatalImpact, &IndexRow::rank_i_f},
                {RankKey::FatalityRate, &IndexRow::rank_i_f_prime}};
    for (const auto& k : keys) {
        const std::vector<std::string> order = rank_countries(rows, k.key);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            for (IndexRow& row : rows) {
                if (row.country_code == order[pos]) {
                    row.*k.field = static_cast<int>(pos) + 1;
                    break;
                }
            }
        }
    }
    return rows;
}

}  // namespace excessd
