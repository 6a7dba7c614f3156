#include "ssrt/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssrt/numerics.hpp"

namespace ssrt {

bool MixtureSsrt::valid() const {
    return w_a >= 0.0 && w_a <= 1.0 && theta_a.valid() && theta_b.valid();
}

void MixtureSsrt::validate() const {
    if (!valid()) throw std::domain_error("MixtureSsrt: require w_a in [0,1] and valid components");
}

double mixture_pdf(const MixtureSsrt& m, double t) {
    m.validate();
    return m.w_a * exg_pdf(m.theta_a, t) + m.w_b() * exg_pdf(m.theta_b, t);
}

double mixture_log_pdf(const MixtureSsrt& m, double t) {
    const double p = mixture_pdf(m, t);
    return p > 0.0 ? std::log(p) : kLogFloor;
}

double mixture_cdf(const MixtureSsrt& m, double t) {
    m.validate();
    return m.w_a * exg_cdf(m.theta_a, t) + m.w_b() * exg_cdf(m.theta_b, t);
}

double mixture_quantile(const MixtureSsrt& m, double prob) {
    m.validate();
    if (!(prob > 0.0 && prob < 1.0))
        throw std::domain_error("mixture_quantile: p must lie in (0,1)");
    double lo = std::min(m.theta_a.mu - 10.0 * m.theta_a.sigma,
                         m.theta_b.mu - 10.0 * m.theta_b.sigma);
    double hi = std::max(m.theta_a.mu + 10.0 * m.theta_a.sigma + 100.0 * m.theta_a.tau,
                         m.theta_b.mu + 10.0 * m.theta_b.sigma + 100.0 * m.theta_b.tau);
    double width = hi - lo;
    while (mixture_cdf(m, lo) > prob) { lo -= width; width *= 2.0; }
    while (mixture_cdf(m, hi) < prob) { hi += width; width *= 2.0; }
    for (int i = 0; i < 200 && hi - lo > 1e-11 * (1.0 + std::fabs(lo)); ++i) {
        const double mid = 0.5 * (lo + hi);
        (mixture_cdf(m, mid) < prob ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> mixture_sample(const MixtureSsrt& m, std::size_t n, Rng& rng) {
    m.validate();
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const ExGaussianParams& comp = rng.bernoulli(m.w_a) ? m.theta_a : m.theta_b;
        out.push_back(rng.normal(comp.mu, comp.sigma) + rng.exponential(comp.tau));
    }
    return out;
}

std::vector<double> mixture_sample(const MixtureSsrt& m, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return mixture_sample(m, n, rng);
}

RawMoments mixture_moments(const MixtureSsrt& m) {
    m.validate();
    const RawMoments a = exg_moments(m.theta_a);
    const RawMoments b = exg_moments(m.theta_b);
    const double w = m.w_a, v = m.w_b();
    return RawMoments{w * a.m1 + v * b.m1, w * a.m2 + v * b.m2,
                      w * a.m3 + v * b.m3, w * a.m4 + v * b.m4};
}

ShapeStats mixture_shape(const MixtureSsrt& m) {
    return shape_from_raw_moments(mixture_moments(m));
}

double mixture_variance_decomposed(const MixtureSsrt& m) {
    m.validate();
    const ShapeStats a = exg_shape(m.theta_a);
    const ShapeStats b = exg_shape(m.theta_b);
    const double ea = exg_moments(m.theta_a).m1;
    const double eb = exg_moments(m.theta_b).m1;
    const double w = m.w_a;
    return w * a.variance + (1.0 - w) * b.variance + w * (1.0 - w) * (ea - eb) * (ea - eb);
}

} // namespace ssrt
