// Value-semantic handle over the two parametric SSRT families used by the
// stochastic-order machinery and the CLI parameter files.
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "ssrt/exgauss.hpp"
#include "ssrt/mixture.hpp"

namespace ssrt {

using Distribution = std::variant<ExGaussianParams, MixtureSsrt>;

double dist_pdf(const Distribution& d, double t);
double dist_cdf(const Distribution& d, double t);
double dist_mean(const Distribution& d);
double dist_variance(const Distribution& d);
std::vector<double> dist_sample(const Distribution& d, std::size_t n, Rng& rng);

} // namespace ssrt
