// Stochastic-order testing: two-sample Kolmogorov-Smirnov (two-sided and
// one-sided, asymptotic p-values), the paired-samples parametric distribution
// test (averaged KS statistic over K simulated sample pairs), and the paired
// t-test used for scalar comparisons.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssrt/distribution.hpp"

namespace ssrt {

enum class Alternative { two_sided, greater, less };

std::string alternative_name(Alternative a);
Alternative parse_alternative(const std::string& name);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
    Alternative alternative = Alternative::two_sided;
    std::size_t n = 0, m = 0;
};

// D = sup|Fx - Fy| for the two-sided test; `greater` uses sup(Fx - Fy) (x
// stochastically smaller under H1), `less` the mirror, matching the usual
// ks.test convention.
KsResult ks_two_sample(std::span<const double> x, std::span<const double> y,
                       Alternative alternative = Alternative::two_sided);

// Asymptotic survival function of the Kolmogorov statistic.
double kolmogorov_p_value(double d, std::size_t n, std::size_t m, Alternative alternative);

struct PspdtConfig {
    int K = 44;
    int n = 96;
    int m = 96;
    double alpha = 0.05;
    Alternative alternative = Alternative::two_sided;
    // Default coefficient is the standard two-sample c(alpha) =
    // sqrt(-ln(alpha/2)/2); the compatibility flag switches to the printed
    // sqrt(-ln(1/2)/2) constant.
    bool paper_critical_coefficient = false;
    int n_null_reps = 200; // Monte-Carlo p-value resolution
    std::uint64_t seed = 1;
};

struct PspdtResult {
    double d_bar = 0.0;
    int K = 0;
    int n = 0, m = 0;
    double alpha = 0.05;
    double critical_value = 0.0;
    bool reject = false;
    Alternative alternative = Alternative::two_sided;
    std::vector<double> per_k;
    // Fraction of null-simulated averaged statistics at or above d_bar.
    double mc_p_value = 1.0;
};

double pspdt_critical_value(double alpha, int n, int m, bool paper_coefficient);

PspdtResult pspdt(const Distribution& dist1, const Distribution& dist2,
                  const PspdtConfig& config);

struct PairedTResult {
    double mean_diff = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
    bool p_defined = true; // false when the differences have zero variance
    std::size_t n = 0;
};

PairedTResult paired_t_test(std::span<const double> a, std::span<const double> b);

} // namespace ssrt
