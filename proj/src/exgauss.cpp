#include "ssrt/exgauss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssrt/numerics.hpp"

namespace ssrt {

bool ExGaussianParams::valid() const {
    return std::isfinite(mu) && std::isfinite(sigma) && std::isfinite(tau) &&
           sigma > 0.0 && tau > 0.0;
}

void ExGaussianParams::validate() const {
    if (!valid()) throw std::domain_error("ExGaussianParams: require finite mu, sigma>0, tau>0");
}

bool in_prior_support(const ExGaussianParams& p) {
    return p.mu >= kPriorLo && p.mu <= kPriorHi && p.sigma >= kPriorLo &&
           p.sigma <= kPriorHi && p.tau >= kPriorLo && p.tau <= kPriorHi;
}

double exg_log_pdf(const ExGaussianParams& p, double t) {
    p.validate();
    const double z = (t - p.mu) / p.sigma;
    const double r = p.sigma / p.tau;
    // log f = -log(tau) + (mu - t)/tau + sigma^2/(2 tau^2) + log Phi(z - sigma/tau)
    double lp = -std::log(p.tau) + (p.mu - t) / p.tau + 0.5 * r * r +
                log_normal_cdf(z - r);
    return std::max(lp, kLogFloor);
}

double exg_pdf(const ExGaussianParams& p, double t) {
    return std::exp(exg_log_pdf(p, t));
}

double exg_cdf(const ExGaussianParams& p, double t) {
    p.validate();
    const double z = (t - p.mu) / p.sigma;
    const double r = p.sigma / p.tau;
    // F(t) = Phi(z) - exp((mu-t)/tau + sigma^2/(2 tau^2)) * Phi(z - sigma/tau),
    // second term assembled in log space.
    const double log_second = (p.mu - t) / p.tau + 0.5 * r * r + log_normal_cdf(z - r);
    const double value = normal_cdf(z) - std::exp(log_second);
    return std::clamp(value, 0.0, 1.0);
}

double exg_log_survival(const ExGaussianParams& p, double t) {
    p.validate();
    const double z = (t - p.mu) / p.sigma;
    const double r = p.sigma / p.tau;
    // 1 - F(t) = Phi(-z) + exp(L); combine in log space.
    const double log_phi_neg = log_normal_cdf(-z);
    const double log_second = (p.mu - t) / p.tau + 0.5 * r * r + log_normal_cdf(z - r);
    const double hi = std::max(log_phi_neg, log_second);
    const double lo = std::min(log_phi_neg, log_second);
    const double ls = hi + std::log1p(std::exp(lo - hi));
    // Survival is a probability; rounding can push the sum a hair above 1.
    return std::min(ls, 0.0);
}

double exg_survival(const ExGaussianParams& p, double t) {
    return std::exp(exg_log_survival(p, t));
}

double exg_quantile(const ExGaussianParams& p, double prob) {
    p.validate();
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("exg_quantile: p must lie in (0,1)");

    double lo = p.mu - 10.0 * p.sigma;
    double hi = p.mu + 10.0 * p.sigma + 100.0 * p.tau;
    // Bracket is generous for any realistic p; widen geometrically just in case.
    double width = hi - lo;
    while (exg_cdf(p, lo) > prob) { lo -= width; width *= 2.0; }
    while (exg_cdf(p, hi) < prob) { hi += width; width *= 2.0; }

    for (int i = 0; i < 80 && hi - lo > 1e-11 * (1.0 + std::fabs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        (exg_cdf(p, mid) < prob ? lo : hi) = mid;
    }
    double q = 0.5 * (lo + hi);
    // Newton polish on F(q) - prob.
    for (int i = 0; i < 8; ++i) {
        const double f = exg_cdf(p, q) - prob;
        if (std::fabs(f) <= 1e-13) break;
        const double d = exg_pdf(p, q);
        if (d <= 0.0) break;
        const double step = f / d;
        const double next = q - step;
        if (next <= lo || next >= hi) break;
        q = next;
    }
    return q;
}

std::vector<double> exg_sample(const ExGaussianParams& p, std::size_t n, Rng& rng) {
    p.validate();
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(rng.normal(p.mu, p.sigma) + rng.exponential(p.tau));
    return out;
}

std::vector<double> exg_sample(const ExGaussianParams& p, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return exg_sample(p, n, rng);
}

RawMoments exg_moments(const ExGaussianParams& p) {
    p.validate();
    const double mu = p.mu, s2 = p.sigma * p.sigma, tau = p.tau;
    const double t2 = tau * tau, t3 = t2 * tau, t4 = t3 * tau;
    RawMoments m;
    m.m1 = mu + tau;
    m.m2 = mu * mu + 2.0 * mu * tau + s2 + 2.0 * t2;
    m.m3 = mu * mu * mu + 3.0 * mu * s2 + 6.0 * mu * t2 + 3.0 * mu * mu * tau +
           3.0 * s2 * tau + 6.0 * t3;
    m.m4 = mu * mu * mu * mu + 4.0 * mu * mu * mu * tau + 6.0 * mu * mu * s2 +
           12.0 * mu * mu * t2 + 24.0 * mu * t3 + 12.0 * mu * s2 * tau +
           3.0 * s2 * s2 + 12.0 * s2 * t2 + 24.0 * t4;
    return m;
}

ShapeStats exg_shape(const ExGaussianParams& p) {
    p.validate();
    const double s2 = p.sigma * p.sigma, t2 = p.tau * p.tau;
    const double ratio = s2 / t2; // sigma^2 tau^-2
    ShapeStats sh;
    sh.variance = s2 + t2;
    sh.skewness = 2.0 * std::pow(1.0 + ratio, -1.5);
    const double inv = t2 / s2; // sigma^-2 tau^2
    sh.kurtosis = 3.0 * (1.0 + 2.0 * inv + 3.0 * inv * inv) / ((1.0 + inv) * (1.0 + inv));
    return sh;
}

ShapeStats shape_from_raw_moments(const RawMoments& m) {
    const double mean = m.m1;
    const double var = m.m2 - mean * mean;
    const double mu3 = m.m3 - 3.0 * mean * m.m2 + 2.0 * mean * mean * mean;
    const double mu4 = m.m4 - 4.0 * mean * m.m3 + 6.0 * mean * mean * m.m2 -
                       3.0 * mean * mean * mean * mean;
    ShapeStats sh;
    sh.variance = var;
    sh.skewness = mu3 / std::pow(var, 1.5);
    sh.kurtosis = mu4 / (var * var);
    return sh;
}

} // namespace ssrt
