#pragma once

namespace excessd::stats {

/// Quantile of the standard normal distribution, 0 < p < 1.
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b).
double regularized_incomplete_beta(double a, double b, double x);

/// Upper-tail probability P(F > f) for an F(d1, d2) distribution.
double f_tail_probability(double f, int d1, int d2);

}  // namespace excessd::stats
