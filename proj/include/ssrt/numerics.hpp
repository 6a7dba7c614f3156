// Shared scalar numerics: normal distribution helpers, log-space guards,
// empirical quantiles, and small summary-statistics utilities.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssrt {

// Floor applied to log-densities so posterior arithmetic stays finite even
// where a density underflows; large enough in magnitude to never matter for
// any realistic comparison.
inline constexpr double kLogFloor = -1e12;

double normal_pdf(double z);
double normal_cdf(double z);
// log Phi(z), accurate far into the left tail (scaled-erfc evaluation).
double log_normal_cdf(double z);

// Two-sided p-value of a t statistic with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);
// Upper 97.5% quantile of the t distribution (for 95% CIs).
double student_t_975_quantile(double df);

// Linear-interpolation empirical quantile (the common continuous "type 7"
// convention: h = (n-1)p). `sorted` must be ascending and non-empty.
double empirical_quantile_sorted(std::span<const double> sorted, double p);
double empirical_quantile(std::vector<double> values, double p);

double mean_of(std::span<const double> xs);
double variance_of(std::span<const double> xs); // sample variance, n-1

} // namespace ssrt
