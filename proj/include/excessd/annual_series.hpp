#pragma once

#include <Eigen/Core>
#include <string>

#include "excessd/errors.hpp"

namespace excessd {

/**
 * One country's yearly death counts over a contiguous year range.
 *
 * Invariants enforced at construction: at least four observations (double
 * differencing plus MA(2) estimation needs them), non-negative values, and
 * contiguous years (implied by start_year + dense storage).
 */
class AnnualSeries {
public:
    AnnualSeries(std::string country_code, int start_year, Eigen::VectorXd values)
        : country_code_(std::move(country_code)),
          start_year_(start_year),
          values_(std::move(values)) {
        if (values_.size() < 4) {
            throw ValidationError("series " + country_code_ + ": needs at least 4 observations, got " +
                                  std::to_string(values_.size()));
        }
        for (Eigen::Index i = 0; i < values_.size(); ++i) {
            if (!(values_[i] >= 0.0)) {
                throw ValidationError("series " + country_code_ + ": negative or non-finite value at year " +
                                      std::to_string(start_year_ + static_cast<int>(i)));
            }
        }
    }

    const std::string& country_code() const { return country_code_; }
    int start_year() const { return start_year_; }
    int end_year() const { return start_year_ + static_cast<int>(values_.size()) - 1; }
    Eigen::Index size() const { return values_.size(); }
    const Eigen::VectorXd& values() const { return values_; }
    double at_year(int year) const { return values_[year - start_year_]; }

private:
    std::string country_code_;
    int start_year_;
    Eigen::VectorXd values_;
};

}  // namespace excessd
