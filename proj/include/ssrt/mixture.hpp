// Two-state mixture SSRT random variable: Bernoulli(w_a) selection between
// two Ex-Gaussian components. Moments combine component raw moments with the
// constant weight; sampling uses the Bernoulli reading.
#pragma once

#include <cstdint>
#include <vector>

#include "ssrt/exgauss.hpp"

namespace ssrt {

struct MixtureSsrt {
    double w_a = 0.5;
    ExGaussianParams theta_a;
    ExGaussianParams theta_b;

    double w_b() const { return 1.0 - w_a; }
    bool valid() const;
    void validate() const;
};

double mixture_log_pdf(const MixtureSsrt& m, double t);
double mixture_pdf(const MixtureSsrt& m, double t);
double mixture_cdf(const MixtureSsrt& m, double t);

// Bisection over the analytic mixture CDF (no closed form exists).
double mixture_quantile(const MixtureSsrt& m, double prob);

std::vector<double> mixture_sample(const MixtureSsrt& m, std::size_t n, Rng& rng);
std::vector<double> mixture_sample(const MixtureSsrt& m, std::size_t n, std::uint64_t seed);

// E[M^k] = w_a E[A^k] + (1-w_a) E[B^k], k = 1..4.
RawMoments mixture_moments(const MixtureSsrt& m);
ShapeStats mixture_shape(const MixtureSsrt& m);

// Decomposed variance w*VarA + (1-w)*VarB + w(1-w)(EA-EB)^2; algebraically
// identical to the raw-moment route, kept as an independent check.
double mixture_variance_decomposed(const MixtureSsrt& m);

} // namespace ssrt
