#include "ssrt/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "ssrt/numerics.hpp"
#include "ssrt/quadrature.hpp"

namespace ssrt {

namespace {

constexpr double kTruncLo = 1.0;
constexpr double kTruncHi = 1000.0;

// Stop-process distribution functions with the optional [1,1000] truncation
// folded in.
struct StopDist {
    const ExGaussianParams& theta;
    bool truncated;
    double z_norm; // F(1000) - F(1) when truncated

    explicit StopDist(const ExGaussianParams& t, bool trunc)
        : theta(t), truncated(trunc), z_norm(1.0) {
        if (truncated) {
            z_norm = exg_cdf(theta, kTruncHi) - exg_cdf(theta, kTruncLo);
            if (z_norm <= 0.0) z_norm = std::numeric_limits<double>::min();
        }
    }

    double pdf(double x) const {
        if (!truncated) return exg_pdf(theta, x);
        if (x < kTruncLo || x > kTruncHi) return 0.0;
        return exg_pdf(theta, x) / z_norm;
    }

    double log_survival(double x) const {
        if (!truncated) return exg_log_survival(theta, x);
        if (x <= kTruncLo) return 0.0;
        if (x >= kTruncHi) return kLogFloor;
        const double s = (exg_cdf(theta, kTruncHi) - exg_cdf(theta, x)) / z_norm;
        return s > 0.0 ? std::log(s) : kLogFloor;
    }
};

} // namespace

void RaceLikelihoodInput::validate() const {
    auto finite = [](double x) { return std::isfinite(x); };
    for (double t : go_rts)
        if (!finite(t)) throw std::invalid_argument("RaceLikelihoodInput: non-finite go RT");
    for (const auto& [rt, ssd] : signal_respond)
        if (!finite(rt) || !finite(ssd) || rt <= 0.0)
            throw std::invalid_argument("RaceLikelihoodInput: bad signal-respond record");
    for (double s : signal_inhibit_ssds)
        if (!finite(s)) throw std::invalid_argument("RaceLikelihoodInput: non-finite SSD");
}

RaceLikelihoodInput make_likelihood_input(const SstDataset& view) {
    RaceLikelihoodInput in;
    for (const Trial& t : view.trials) {
        if (t.kind == TrialKind::go) {
            if (t.rt_ms) in.go_rts.push_back(*t.rt_ms);
        } else if (t.inhibited.value_or(false)) {
            in.signal_inhibit_ssds.push_back(t.ssd_ms.value());
        } else {
            in.signal_respond.emplace_back(t.rt_ms.value(), t.ssd_ms.value());
        }
    }
    return in;
}

double loglik_go(const ExGaussianParams& theta_go, const std::vector<double>& go_rts) {
    theta_go.validate();
    double ll = 0.0;
    for (double t : go_rts) ll += exg_log_pdf(theta_go, t);
    return std::max(ll, kLogFloor);
}

double inhibit_integral(const ExGaussianParams& theta_go, const ExGaussianParams& theta_stop,
                        double ssd_ms, const LikelihoodOptions& opts) {
    theta_go.validate();
    theta_stop.validate();
    const StopDist stop(theta_stop, opts.beests_truncation);
    const double t_cap = theta_go.mu + 10.0 * theta_go.sigma + 100.0 * theta_go.tau + ssd_ms;
    // The stop density carries all the mass; restricting [0, t_cap] to its
    // effective support keeps narrow stop distributions visible to the
    // adaptive rule without changing the integral.
    double lo = ssd_ms + theta_stop.mu - 12.0 * theta_stop.sigma;
    double hi = ssd_ms + theta_stop.mu + 12.0 * theta_stop.sigma + 120.0 * theta_stop.tau;
    if (opts.beests_truncation) {
        lo = std::max(lo, ssd_ms + kTruncLo);
        hi = std::min(hi, ssd_ms + kTruncHi);
    }
    lo = std::max(lo, 0.0);
    hi = std::min(hi, t_cap);
    if (lo >= hi) return 0.0;
    const auto integrand = [&](double t) {
        return exg_survival(theta_go, t) * stop.pdf(t - ssd_ms);
    };
    const double v = integrate(integrand, lo, hi, opts.quad_epsabs, opts.quad_epsrel);
    return std::clamp(v, 0.0, 1.0);
}

double stop_log_survival(const ExGaussianParams& theta_stop, double x,
                         const LikelihoodOptions& opts) {
    theta_stop.validate();
    return std::max(StopDist(theta_stop, opts.beests_truncation).log_survival(x), kLogFloor);
}

double loglik_stop(const ExGaussianParams& theta_go, const ExGaussianParams& theta_stop,
                   const RaceLikelihoodInput& input, const LikelihoodOptions& opts) {
    theta_go.validate();
    theta_stop.validate();
    const StopDist stop(theta_stop, opts.beests_truncation);

    double ll = 0.0;
    for (const auto& [rt, ssd] : input.signal_respond) {
        ll += exg_log_pdf(theta_go, rt);
        ll += std::max(stop.log_survival(rt - ssd), kLogFloor);
    }

    // The staircase revisits the same delays; one quadrature per distinct SSD.
    std::map<double, int> ssd_counts;
    for (double ssd : input.signal_inhibit_ssds) ++ssd_counts[ssd];
    for (const auto& [ssd, count] : ssd_counts) {
        const double p = inhibit_integral(theta_go, theta_stop, ssd, opts);
        ll += count * (p > 0.0 ? std::log(p) : kLogFloor);
    }
    return std::max(ll, kLogFloor);
}

} // namespace ssrt
