#include "ssrt/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gsl/gsl_cdf.h>
#include <gsl/gsl_sf_erf.h>

namespace ssrt {

double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double z) {
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double log_normal_cdf(double z) {
    // Phi(z) = erfc(-z/sqrt2)/2; gsl_sf_log_erfc stays accurate where erfc
    // itself would underflow (z << -30).
    return gsl_sf_log_erfc(-z / std::numbers::sqrt2) - std::numbers::ln2;
}

double student_t_two_sided_p(double t, double df) {
    const double tail = gsl_cdf_tdist_Q(std::fabs(t), df);
    return std::min(1.0, 2.0 * tail);
}

double student_t_975_quantile(double df) {
    return gsl_cdf_tdist_Pinv(0.975, df);
}

double empirical_quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("empirical_quantile: p outside [0,1]");
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= n) return sorted[n - 1];
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double empirical_quantile(std::vector<double> values, double p) {
    std::sort(values.begin(), values.end());
    return empirical_quantile_sorted(values, p);
}

double mean_of(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean_of: empty sample");
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double variance_of(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("variance_of: need at least 2 values");
    const double m = mean_of(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

} // namespace ssrt
